"""Generalized Green's relations relative to a set E of idempotents.

Given E, two elements are L~-related when they have the same right
identities from E (dually R~ with left identities).  A semigroup is an
E-Fountain when every L~- and R~-class meets E, and *reduced* when
ef = e iff fe = e on E; then each class holds a unique E-idempotent,
written star(a) for the L~-class of a and plus(a) for its R~-class.
star(a) is the least right identity of a from E, plus(a) the least left
identity.  The congruence condition asks that L~ be a right congruence
and R~ a left congruence, equivalently (ab)* = (a*b)* and (ab)+ = (ab+)+.

On top of that structure this module checks the generalized right ample
identity  (e(a(eaf)*)+)* = (a(eaf)*)+  and its dual, and exposes the
right-multiplication maps between L~-classes together with the
partial-action homomorphism test that characterizes the identity.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from efountain.semigroups import FiniteSemigroup, NotIdempotent

__all__ = [
    "BudgetExceeded",
    "DomainMismatch",
    "EStructure",
    "FountainReport",
    "NotIdempotentInE",
    "NotReducedEFountain",
    "PartialMap",
    "Verdict",
    "build_estructure",
    "congruence_condition",
    "e_fountain_check",
    "enumerate_action_homs",
    "gla_check",
    "gra_action_equivalence",
    "gra_check",
    "gra_simplified_check",
    "is_partial_action_hom",
    "r_alpha",
    "tilde_classes",
    "verdict_record",
]

DEFAULT_HOM_BUDGET = 10 ** 6


class NotIdempotentInE(NotIdempotent):
    pass


class NotReducedEFountain(ValueError):
    def __init__(self, report: "FountainReport"):
        self.report = report
        super().__init__(f"not a reduced E-Fountain semigroup: {report}")


class BudgetExceeded(RuntimeError):
    pass


class DomainMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Verdict:
    """Outcome of an identity sweep: holds, or the first failing tuple.

    Witnesses are reported for the lexicographically least index tuple, so
    repeated runs agree byte for byte.
    """

    holds: bool
    witness: tuple[int, ...] | None = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class PartialMap:
    """A partial function between indexed sets; None marks undefined points."""

    domain_size: int
    codomain_size: int
    images: tuple[int | None, ...]

    def __post_init__(self):
        if len(self.images) != self.domain_size:
            raise DomainMismatch(
                f"expected {self.domain_size} images, got {len(self.images)}")
        for v in self.images:
            if v is not None and not (0 <= v < self.codomain_size):
                raise DomainMismatch(f"image {v} outside 0..{self.codomain_size - 1}")

    @classmethod
    def identity(cls, n: int) -> "PartialMap":
        return cls(n, n, tuple(range(n)))

    @property
    def is_total(self) -> bool:
        return all(v is not None for v in self.images)

    def defined(self) -> tuple[int, ...]:
        return tuple(i for i, v in enumerate(self.images) if v is not None)

    def compose(self, other: "PartialMap") -> "PartialMap":
        """self after other (apply ``other`` first)."""
        if other.codomain_size != self.domain_size:
            raise DomainMismatch("composition size mismatch")
        imgs = tuple(
            None if v is None else self.images[v]
            for v in other.images
        )
        return PartialMap(other.domain_size, self.codomain_size, imgs)


def _right_identity_sets(s: FiniteSemigroup, E: tuple[int, ...]) -> list[frozenset[int]]:
    rows = s.rows
    return [frozenset(e for e in E if rows[a][e] == a) for a in range(s.size)]


def _left_identity_sets(s: FiniteSemigroup, E: tuple[int, ...]) -> list[frozenset[int]]:
    rows = s.rows
    return [frozenset(e for e in E if rows[e][a] == a) for a in range(s.size)]


def _validated_e(s: FiniteSemigroup, E) -> tuple[int, ...]:
    E = tuple(sorted(set(int(e) for e in E)))
    if not E:
        raise ValueError("E must be nonempty for a nonempty semigroup")
    for e in E:
        if not (0 <= e < s.size):
            raise ValueError(f"E member {e} outside 0..{s.size - 1}")
        if s.mul(e, e) != e:
            raise NotIdempotentInE(e)
    return E


def _partition_by(keys) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
    by_key: dict = {}
    for i, k in enumerate(keys):
        by_key.setdefault(k, []).append(i)
    classes = tuple(tuple(c) for c in sorted(by_key.values(), key=lambda c: c[0]))
    index = [0] * len(keys)
    for ci, cls in enumerate(classes):
        for i in cls:
            index[i] = ci
    return classes, tuple(index)


def tilde_classes(s: FiniteSemigroup, E) -> tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]]:
    """The L~ and R~ partitions: same right / left identities from E."""
    E = _validated_e(s, E)
    lt, _ = _partition_by(_right_identity_sets(s, E))
    rt, _ = _partition_by(_left_identity_sets(s, E))
    return lt, rt


@dataclass(frozen=True)
class FountainReport:
    fountain: bool
    reduced: bool
    fountain_witness: tuple[str, tuple[int, ...]] | None = None
    reduced_witness: tuple[int, int] | None = None


def e_fountain_check(s: FiniteSemigroup, E) -> FountainReport:
    """Check the E-Fountain property and reducedness of E.

    Failures are reported as witnesses (first offending class or pair), not
    raised.
    """
    E = _validated_e(s, E)
    e_set = set(E)
    lt, rt = tilde_classes(s, E)
    fountain = True
    fountain_witness = None
    for side, classes in (("ltilde", lt), ("rtilde", rt)):
        for cls in classes:
            if not any(x in e_set for x in cls):
                fountain = False
                fountain_witness = (side, cls)
                break
        if not fountain:
            break
    reduced = True
    reduced_witness = None
    for e in E:
        for f in E:
            if (s.mul(e, f) == e) != (s.mul(f, e) == e):
                reduced = False
                reduced_witness = (e, f)
                break
        if not reduced:
            break
    return FountainReport(fountain, reduced, fountain_witness, reduced_witness)


@dataclass(frozen=True, eq=False)
class EStructure:
    """A reduced E-Fountain structure: E, the star/plus maps, tilde classes."""

    semigroup: FiniteSemigroup
    E: tuple[int, ...]
    star: tuple[int, ...]
    plus: tuple[int, ...]
    ltilde_classes: tuple[tuple[int, ...], ...]
    rtilde_classes: tuple[tuple[int, ...], ...]
    ltilde_index: tuple[int, ...]
    rtilde_index: tuple[int, ...]

    @property
    def size(self) -> int:
        return self.semigroup.size

    def mul(self, i: int, j: int) -> int:
        return self.semigroup.mul(i, j)

    @cached_property
    def e_position(self) -> dict[int, int]:
        """Element index of an E member -> its position in the E tuple."""
        return {e: k for k, e in enumerate(self.E)}

    def ltilde(self, x: int) -> tuple[int, ...]:
        return self.ltilde_classes[self.ltilde_index[x]]

    def rtilde(self, x: int) -> tuple[int, ...]:
        return self.rtilde_classes[self.rtilde_index[x]]


def build_estructure(s: FiniteSemigroup, E) -> EStructure:
    """Build the star/plus maps after verifying the reduced E-Fountain axioms."""
    E = _validated_e(s, E)
    report = e_fountain_check(s, E)
    if not (report.fountain and report.reduced):
        raise NotReducedEFountain(report)
    e_set = set(E)
    lt, lt_index = _partition_by(_right_identity_sets(s, E))
    rt, rt_index = _partition_by(_left_identity_sets(s, E))
    star = [0] * s.size
    plus = [0] * s.size
    for cls in lt:
        members = [x for x in cls if x in e_set]
        assert len(members) == 1, "reducedness forces a unique E member per class"
        for x in cls:
            star[x] = members[0]
    for cls in rt:
        members = [x for x in cls if x in e_set]
        assert len(members) == 1
        for x in cls:
            plus[x] = members[0]
    for a in range(s.size):
        assert s.mul(a, star[a]) == a and s.mul(plus[a], a) == a
    return EStructure(
        semigroup=s, E=E, star=tuple(star), plus=tuple(plus),
        ltilde_classes=lt, rtilde_classes=rt,
        ltilde_index=lt_index, rtilde_index=rt_index,
    )


def congruence_condition(es: EStructure) -> Verdict:
    """Check (ab)* = (a*b)* and (ab)+ = (ab+)+ over all pairs."""
    s = es.semigroup
    rows = s.rows
    star, plus = es.star, es.plus
    n = s.size
    for a in range(n):
        for b in range(n):
            ab = rows[a][b]
            if star[ab] != star[rows[star[a]][b]]:
                return Verdict(False, (a, b), "star identity")
            if plus[ab] != plus[rows[a][plus[b]]]:
                return Verdict(False, (a, b), "plus identity")
    return Verdict(True)


def gra_check(es: EStructure) -> Verdict:
    """The generalized right ample identity, swept over all (a, e, f).

    Checks (e(a(eaf)*)+)* = (a(eaf)*)+ for a in S and e, f in E.
    """
    rows = es.semigroup.rows
    star, plus = es.star, es.plus
    for a in range(es.size):
        ra = rows[a]
        for e in es.E:
            ea = rows[e][a]
            for f in es.E:
                t = ra[star[rows[ea][f]]]
                if star[rows[e][plus[t]]] != plus[t]:
                    return Verdict(False, (a, e, f))
    return Verdict(True)


def gra_simplified_check(es: EStructure) -> Verdict:
    """The two-variable form (e(a(ea)*)+)* = (a(ea)*)+; equivalent to gra_check."""
    rows = es.semigroup.rows
    star, plus = es.star, es.plus
    for a in range(es.size):
        ra = rows[a]
        for e in es.E:
            t = ra[star[rows[e][a]]]
            if star[rows[e][plus[t]]] != plus[t]:
                return Verdict(False, (a, e))
    return Verdict(True)


def gla_check(es: EStructure) -> Verdict:
    """The generalized left ample identity (((ae)+a)*e)+ = ((ae)+a)*."""
    rows = es.semigroup.rows
    star, plus = es.star, es.plus
    for a in range(es.size):
        ra = rows[a]
        for e in es.E:
            t = rows[plus[ra[e]]][a]
            if plus[rows[star[t]][e]] != star[t]:
                return Verdict(False, (a, e))
    return Verdict(True)


def r_alpha(es: EStructure, alpha: int) -> PartialMap:
    """Right multiplication by alpha, from L~(plus(alpha)) to L~(star(alpha)).

    Under the congruence condition (x*alpha)* = alpha* for every x in the
    source class, so the map is total.  Images are positions within the
    sorted target class, making maps comparable as plain tuples.
    """
    s = es.semigroup
    src = es.ltilde(es.plus[alpha])
    dst = es.ltilde(es.star[alpha])
    dst_pos = {x: k for k, x in enumerate(dst)}
    images = []
    for x in src:
        xa = s.mul(x, alpha)
        if xa not in dst_pos:
            raise ValueError(
                f"x*alpha left the target class at x={x}, alpha={alpha}; "
                "the congruence condition fails for this structure")
        images.append(dst_pos[xa])
    return PartialMap(len(src), len(dst), tuple(images))


def is_partial_action_hom(es: EStructure, F: PartialMap, e: int, f: int) -> bool:
    """Is a total map L~(e) -> L~(f) a homomorphism of partial left actions?

    S acts on each class by s.x = sx when sx stays in the class.  F must
    preserve definedness both ways and commute with the action.
    """
    if e not in es.e_position or f not in es.e_position:
        raise ValueError("e and f must be members of E")
    src = es.ltilde(e)
    dst = es.ltilde(f)
    if F.domain_size != len(src) or F.codomain_size != len(dst) or not F.is_total:
        raise DomainMismatch(
            f"map has shape {F.domain_size}->{F.codomain_size}, "
            f"classes have sizes {len(src)}->{len(dst)}")
    rows = es.semigroup.rows
    src_cls = es.ltilde_index[e]
    dst_cls = es.ltilde_index[f]
    lt_index = es.ltilde_index
    src_pos = {x: k for k, x in enumerate(src)}
    for k, x in enumerate(src):
        fx = dst[F.images[k]]
        for t in range(es.size):
            tx = rows[t][x]
            lhs_defined = lt_index[tx] == src_cls
            rhs_defined = lt_index[rows[t][fx]] == dst_cls
            if lhs_defined != rhs_defined:
                return False
            if lhs_defined and dst[F.images[src_pos[tx]]] != rows[t][fx]:
                return False
    return True


def gra_action_equivalence(es: EStructure) -> bool:
    """Oracle for: GRA holds iff every right-multiplication map is an
    action homomorphism.  Returns the truth of the biconditional."""
    gra = gra_check(es).holds
    all_homs = all(
        is_partial_action_hom(es, r_alpha(es, a), es.plus[a], es.star[a])
        for a in range(es.size)
    )
    return gra == all_homs


def verdict_record(s: FiniteSemigroup, E) -> dict:
    """Flat JSON-ready summary: {fountain, reduced, congruence, gra, gla,
    witnesses}.  Conditions that cannot be evaluated (their prerequisites
    failed) are None; witnesses carry indices and display labels."""
    record: dict = {"fountain": None, "reduced": None, "congruence": None,
                    "gra": None, "gla": None, "witnesses": []}

    def witness(kind, indices):
        record["witnesses"].append({
            "kind": kind,
            "indices": [int(i) for i in indices],
            "labels": [s.label(int(i)) for i in indices],
        })

    report = e_fountain_check(s, E)
    record["fountain"] = report.fountain
    record["reduced"] = report.reduced
    if report.fountain_witness is not None:
        witness("fountain:" + report.fountain_witness[0], report.fountain_witness[1])
    if report.reduced_witness is not None:
        witness("reduced", report.reduced_witness)
    if not (report.fountain and report.reduced):
        return record
    es = build_estructure(s, E)
    cong = congruence_condition(es)
    record["congruence"] = cong.holds
    if cong.witness is not None:
        witness("congruence", cong.witness)
    if not cong.holds:
        return record
    gra = gra_check(es)
    gla = gla_check(es)
    record["gra"] = gra.holds
    record["gla"] = gla.holds
    if gra.witness is not None:
        witness("gra", gra.witness)
    if gla.witness is not None:
        witness("gla", gla.witness)
    return record


def enumerate_action_homs(es: EStructure, e: int, f: int,
                          budget: int = DEFAULT_HOM_BUDGET) -> tuple[PartialMap, ...]:
    """All total maps L~(e) -> L~(f) that are partial-action homomorphisms.

    Brute force over |L~(f)| ** |L~(e)| candidates, in lexicographic image
    order.  Every hom found equals right multiplication by some alpha with
    plus(alpha) = e and star(alpha) = f; under the generalized right ample
    identity the two sets coincide.
    """
    if e not in es.e_position or f not in es.e_position:
        raise ValueError("e and f must be members of E")
    src = es.ltilde(e)
    dst = es.ltilde(f)
    count = len(dst) ** len(src)
    if count > budget:
        raise BudgetExceeded(f"{count} candidate maps exceed budget {budget}")
    found = []
    for images in itertools.product(range(len(dst)), repeat=len(src)):
        cand = PartialMap(len(src), len(dst), images)
        if is_partial_action_hom(es, cand, e, f):
            found.append(cand)
    return tuple(found)
