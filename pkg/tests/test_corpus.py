"""Contracts of the committed corpus and the theorem biconditionals on it."""

import pytest

from efountain.algebras import (
    category_algebra,
    check_algebra_hom,
    check_iso,
    order_condition,
    phi,
    semigroup_algebra,
)
from efountain.categories import associated_category
from efountain.corpus import corpus_names, load_corpus, load_instance, parse_e_text
from efountain.fountain import (
    build_estructure,
    congruence_condition,
    e_fountain_check,
    gra_check,
    gra_simplified_check,
    is_partial_action_hom,
    r_alpha,
)
from efountain.semigroups import idempotents, rho_hom_check


@pytest.fixture(scope="module")
def corpus():
    return load_corpus()


def test_parse_e_text():
    assert parse_e_text("# comment\n0 2 1\n") == (0, 1, 2)
    assert parse_e_text("3\n") == (3,)


def test_corpus_size_and_orders(corpus):
    assert len(corpus) >= 50
    assert all(inst.semigroup.size <= 6 for inst in corpus)
    assert any(inst.name.startswith("gra_fail_") for inst in corpus)


def test_max_order_filter():
    small = load_corpus(max_order=3)
    assert small and all(inst.semigroup.size <= 3 for inst in small)


def test_corpus_instances_satisfy_contract(corpus):
    """Everything committed is a reduced E-Fountain semigroup with the
    congruence condition."""
    for inst in corpus:
        rep = e_fountain_check(inst.semigroup, inst.E)
        assert rep.fountain and rep.reduced, inst.name
        es = build_estructure(inst.semigroup, inst.E)
        assert congruence_condition(es).holds, inst.name


def test_corpus_gra_flags_match(corpus):
    for inst in corpus:
        es = build_estructure(inst.semigroup, inst.E)
        assert gra_check(es).holds == inst.expected_gra, inst.name


def test_minimal_gra_failure_is_order_three():
    inst = load_instance("gra_fail_00")
    assert inst.semigroup.size == 3
    es = build_estructure(inst.semigroup, inst.E)
    v = gra_check(es)
    assert not v.holds and v.witness is not None


def test_theorem_biconditional_chain(corpus):
    """gra == simplified == every right multiplication is an action
    homomorphism == the structural map is multiplicative, on every instance;
    under the order condition the map is invertible and being an algebra
    isomorphism is again equivalent."""
    for inst in corpus:
        es = build_estructure(inst.semigroup, inst.E)
        gra = gra_check(es).holds
        assert gra_simplified_check(es).holds == gra, inst.name
        homs = all(
            is_partial_action_hom(es, r_alpha(es, a), es.plus[a], es.star[a])
            for a in range(es.size))
        assert homs == gra, inst.name
        m = phi(es)
        hom_v = check_algebra_hom(
            m, semigroup_algebra(inst.semigroup),
            category_algebra(associated_category(es)))
        assert hom_v.holds == gra, inst.name
        if order_condition(es):
            assert check_iso(m), inst.name
            assert (hom_v.holds and check_iso(m)) == gra, inst.name


def test_classical_translations_are_action_homs(corpus):
    """Green's-lemma right translations pass the homomorphism oracle for
    every regular element of every corpus semigroup."""
    for inst in corpus:
        s = inst.semigroup
        rows = s.rows
        for a in range(s.size):
            regular = any(rows[rows[a][b]][a] == a for b in range(s.size))
            if regular:
                assert rho_hom_check(s, a), (inst.name, a)


def test_corpus_e_members_idempotent(corpus):
    for inst in corpus:
        idem = set(idempotents(inst.semigroup))
        assert set(inst.E) <= idem, inst.name


def test_names_sorted_and_paired():
    names = corpus_names()
    assert list(names) == sorted(names)
    for name in names:
        load_instance(name)  # both files exist and parse
