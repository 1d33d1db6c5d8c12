"""The acceptance gate: one test per verification criterion.

Every criterion runs at its exact tolerance (all comparisons are exact) and
prints one PASS/FAIL line; a failing criterion lists its failing sub-checks.
Run with ``pytest -s tests/test_acceptance.py`` to see the lines as they
happen, or use ``efountain verify --suite paper``.
"""

import pytest

from efountain.verify import CRITERIA, run_criteria


@pytest.mark.parametrize("name", list(CRITERIA))
def test_criterion(name):
    [result] = run_criteria(only=[name])
    print(result.summary())
    assert result.passed, (
        f"criterion {name!r} failed these checks: {result.failures}")
