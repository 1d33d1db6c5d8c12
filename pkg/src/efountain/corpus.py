"""Loader for the committed corpus of small reduced E-Fountain semigroups.

Each instance is a pair of files under data/corpus: ``name.tbl`` in the
multiplication-table text format and ``name.e`` holding one line of
space-separated 0-based indices (the chosen E).  Instances named
``gra_fail_*`` violate the generalized right ample identity; everything in
the corpus satisfies the reduced E-Fountain axioms and the congruence
condition.  The set is regenerated deterministically by
tools/generate_corpus.py.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from efountain.semigroups import FiniteSemigroup, from_table, parse_table_text

__all__ = ["CorpusInstance", "corpus_names", "load_corpus", "load_instance", "parse_e_text"]


@dataclass(frozen=True, eq=False)
class CorpusInstance:
    name: str
    semigroup: FiniteSemigroup
    E: tuple[int, ...]

    @property
    def expected_gra(self) -> bool:
        return not self.name.startswith("gra_fail_")


def parse_e_text(text: str) -> tuple[int, ...]:
    """Parse an E-subset file: space-separated indices, '#' comments."""
    toks = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        toks.extend(line.split())
    return tuple(sorted(set(int(t) for t in toks)))


def _corpus_root():
    return resources.files("efountain").joinpath("data/corpus")


def corpus_names() -> tuple[str, ...]:
    root = _corpus_root()
    names = sorted(
        entry.name[:-4] for entry in root.iterdir() if entry.name.endswith(".tbl")
    )
    return tuple(names)


def load_instance(name: str) -> CorpusInstance:
    root = _corpus_root()
    grid, labels = parse_table_text(root.joinpath(f"{name}.tbl").read_text(encoding="utf-8"))
    E = parse_e_text(root.joinpath(f"{name}.e").read_text(encoding="utf-8"))
    return CorpusInstance(name=name, semigroup=from_table(grid, labels), E=E)


def load_corpus(max_order: int | None = None) -> tuple[CorpusInstance, ...]:
    out = []
    for name in corpus_names():
        inst = load_instance(name)
        if max_order is None or inst.semigroup.size <= max_order:
            out.append(inst)
    return tuple(out)
