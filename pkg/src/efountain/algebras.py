"""Rational semigroup and category algebras, the structural linear map between
them, L~-class modules and their hom spaces, Peirce dimension counts, and the
characteristic-zero semisimplicity test.

All coefficients are exact rationals.  Basis products in both algebra kinds
are a single basis element or zero, which keeps multiplication sparse.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from efountain.categories import FiniteCategory, associated_category
from efountain.fountain import EStructure, Verdict
from efountain.linalg import QQ, LinearMap, nullspace, row_reduce
from efountain.semigroups import FiniteSemigroup

__all__ = [
    "Algebra",
    "apply_linear",
    "closure_is_antisymmetric",
    "AlgebraElement",
    "BasisMismatch",
    "ClassModule",
    "DimensionMismatch",
    "HomSpace",
    "NoUnit",
    "WrongCharacteristic",
    "category_algebra",
    "check_algebra_hom",
    "check_iso",
    "hom_space",
    "is_semisimple_char0",
    "ltilde_module",
    "order_condition",
    "peirce_dims",
    "phi",
    "phi_module_iso",
    "semigroup_algebra",
    "semigroup_algebra_mult",
    "category_algebra_mult",
    "triangle_left",
]


class BasisMismatch(ValueError):
    pass


class DimensionMismatch(ValueError):
    pass


class NoUnit(ValueError):
    pass


class WrongCharacteristic(ValueError):
    pass


@dataclass(frozen=True)
class AlgebraElement:
    """A sparse rational vector over a tagged basis.

    ``items`` is sorted by basis index and never stores zero coefficients,
    so equality is plain tuple equality.
    """

    tag: tuple[str, int]
    items: tuple[tuple[int, Fraction], ...]

    @classmethod
    def make(cls, tag, mapping) -> "AlgebraElement":
        items = tuple(sorted(
            (i, Fraction(c)) for i, c in dict(mapping).items() if c
        ))
        return cls(tag, items)

    def coeff(self, i: int) -> Fraction:
        for j, c in self.items:
            if j == i:
                return c
        return Fraction(0)

    @property
    def is_zero(self) -> bool:
        return not self.items

    def _require_same_tag(self, other: "AlgebraElement") -> None:
        if self.tag != other.tag:
            raise BasisMismatch(f"cannot combine {self.tag} with {other.tag}")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._require_same_tag(other)
        acc = dict(self.items)
        for i, c in other.items:
            acc[i] = acc.get(i, Fraction(0)) + c
        return AlgebraElement.make(self.tag, acc)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + other.scaled(Fraction(-1))

    def scaled(self, k) -> "AlgebraElement":
        k = Fraction(k)
        return AlgebraElement.make(self.tag, {i: c * k for i, c in self.items})

    def __rmul__(self, k):
        return self.scaled(k)


@dataclass(frozen=True, eq=False)
class Algebra:
    """A rational algebra whose basis products are single basis elements or 0."""

    tag: tuple[str, int]
    dim: int
    basis_product: Callable[[int, int], int | None]
    unit: AlgebraElement | None
    labels: tuple[str, ...]

    def basis(self, i: int) -> AlgebraElement:
        if not (0 <= i < self.dim):
            raise BasisMismatch(f"basis index {i} outside 0..{self.dim - 1}")
        return AlgebraElement(self.tag, ((i, Fraction(1)),))

    def zero(self) -> AlgebraElement:
        return AlgebraElement(self.tag, ())

    def element(self, mapping) -> AlgebraElement:
        x = AlgebraElement.make(self.tag, mapping)
        if x.items and x.items[-1][0] >= self.dim:
            raise BasisMismatch("coefficient beyond basis dimension")
        return x

    def mult(self, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
        if x.tag != self.tag or y.tag != self.tag:
            raise BasisMismatch(f"elements tagged {x.tag}/{y.tag}, algebra {self.tag}")
        acc: dict[int, Fraction] = {}
        bp = self.basis_product
        for i, ci in x.items:
            for j, cj in y.items:
                k = bp(i, j)
                if k is not None:
                    acc[k] = acc.get(k, Fraction(0)) + ci * cj
        return AlgebraElement.make(self.tag, acc)


def semigroup_algebra(s: FiniteSemigroup) -> Algebra:
    """The rational semigroup algebra; unital iff the semigroup is a monoid."""
    tag = ("semigroup", s.size)
    unit = None
    if s.identity is not None:
        unit = AlgebraElement(tag, ((s.identity, Fraction(1)),))
    rows = s.rows

    def bp(i: int, j: int) -> int:
        return rows[i][j]

    return Algebra(tag=tag, dim=s.size, basis_product=bp, unit=unit,
                   labels=tuple(s.label(i) for i in range(s.size)))


def category_algebra(c: FiniteCategory) -> Algebra:
    """The rational category algebra: non-composable products vanish; the
    unit is the sum of the identity morphisms."""
    tag = ("category", c.n_morphisms)
    unit = AlgebraElement.make(tag, {c.identity[o]: 1 for o in range(c.n_objects)})
    comp = c.compose_table

    def bp(i: int, j: int) -> int | None:
        v = int(comp[i, j])
        return None if v == -1 else v

    return Algebra(tag=tag, dim=c.n_morphisms, basis_product=bp, unit=unit,
                   labels=c.morphism_labels)


def semigroup_algebra_mult(s: FiniteSemigroup, x: AlgebraElement,
                           y: AlgebraElement) -> AlgebraElement:
    return semigroup_algebra(s).mult(x, y)


def category_algebra_mult(c: FiniteCategory, x: AlgebraElement,
                          y: AlgebraElement) -> AlgebraElement:
    return category_algebra(c).mult(x, y)


# ---------------------------------------------------------------------------
# The structural map from the semigroup algebra to the category algebra
# ---------------------------------------------------------------------------

def triangle_left(es: EStructure, a: int, b: int) -> bool:
    """a is left-below b when a = b*e for some e in E (equivalently a = b*a^*)."""
    return any(es.mul(b, e) == a for e in es.E)


def _below_sets(es: EStructure) -> list[set[int]]:
    s = es.semigroup
    return [{s.mul(a, e) for e in es.E} for a in range(s.size)]


def closure_is_antisymmetric(below: list[set[int]]) -> bool:
    """Antisymmetry of the reflexive-transitive closure of a relation given
    as per-element predecessor sets."""
    n = len(below)
    reach = [1 << a for a in range(n)]
    for a in range(n):
        for c in below[a]:
            reach[a] |= 1 << c
    changed = True
    while changed:
        changed = False
        for a in range(n):
            m = reach[a]
            acc = m
            mm = m
            while mm:
                c = (mm & -mm).bit_length() - 1
                mm &= mm - 1
                acc |= reach[c]
            if acc != m:
                reach[a] = acc
                changed = True
    for a in range(n):
        for b in range(a + 1, n):
            if (reach[a] >> b & 1) and (reach[b] >> a & 1):
                return False
    return True


def order_condition(es: EStructure, lex_leq=None) -> bool:
    """True when the left-below relation embeds in a partial order.

    For a finite semigroup that is exactly antisymmetry of the reflexive-
    transitive closure.  When ``lex_leq`` is given, containment of the
    relation in that order is also required.
    """
    n = es.size
    below = _below_sets(es)
    if lex_leq is not None:
        for a in range(n):
            for c in below[a]:
                if not lex_leq(c, a):
                    return False
    return closure_is_antisymmetric(below)


def phi(es: EStructure) -> LinearMap:
    """The linear map from the semigroup algebra to the category algebra:
    column a is the characteristic vector of {c : c left-below a}.

    It is an algebra homomorphism exactly when the generalized right ample
    identity holds, and additionally bijective when the left-below relation
    embeds in a partial order.
    """
    n = es.size
    below = _below_sets(es)
    rows = [[Fraction(0)] * n for _ in range(n)]
    for a in range(n):
        for c in below[a]:
            rows[c][a] = Fraction(1)
    return LinearMap.from_rows(rows)


def apply_linear(F: LinearMap, x: AlgebraElement, out_algebra: Algebra) -> AlgebraElement:
    """Apply a matrix to a sparse element, landing in ``out_algebra``."""
    if F.cols != x.tag[1]:
        raise DimensionMismatch(f"map has {F.cols} columns, element lives in "
                                f"dimension {x.tag[1]}")
    if F.rows != out_algebra.dim:
        raise DimensionMismatch("map rows do not match target dimension")
    acc: dict[int, Fraction] = {}
    for j, cj in x.items:
        col = F.column(j)
        for i, v in enumerate(col):
            if v:
                acc[i] = acc.get(i, Fraction(0)) + cj * v
    return AlgebraElement.make(out_algebra.tag, acc)


def check_algebra_hom(F: LinearMap, src: Algebra, dst: Algebra) -> Verdict:
    """Multiplicativity of F on all basis pairs of the source algebra."""
    if F.cols != src.dim or F.rows != dst.dim:
        raise DimensionMismatch(
            f"map is {F.rows}x{F.cols}, algebras have dims {dst.dim}/{src.dim}")
    images = [apply_linear(F, src.basis(i), dst) for i in range(src.dim)]
    for i in range(src.dim):
        for j in range(src.dim):
            k = src.basis_product(i, j)
            lhs = images[k] if k is not None else dst.zero()
            rhs = dst.mult(images[i], images[j])
            if lhs != rhs:
                return Verdict(False, (i, j))
    return Verdict(True)


def check_iso(F: LinearMap, field=QQ) -> bool:
    """Invertibility over the rationals by exact elimination."""
    return F.is_invertible(field)


# ---------------------------------------------------------------------------
# L~-class modules
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class ClassModule:
    """The module structure on the span of one L~-class: per-element 0/1
    action matrices (s.x = sx when sx stays in the class, else 0)."""

    e: int
    basis: tuple[int, ...]
    action: tuple[np.ndarray, ...]


def ltilde_module(es: EStructure, e: int) -> ClassModule:
    """Build the action matrices on the L~-class of e and verify the module
    axiom (st).x = s.(t.x) exhaustively."""
    s = es.semigroup
    cls = es.ltilde(e)
    pos = {x: k for k, x in enumerate(cls)}
    d = len(cls)
    n = s.size
    rows = s.rows
    mats = []
    for t in range(n):
        m = np.zeros((d, d), dtype=np.int64)
        for k, x in enumerate(cls):
            tx = rows[t][x]
            if tx in pos:
                m[pos[tx], k] = 1
        m.setflags(write=False)
        mats.append(m)
    for a in range(n):
        for b in range(n):
            if not np.array_equal(mats[rows[a][b]], mats[a] @ mats[b]):
                raise ValueError(
                    f"module axiom fails on L~({e}) at pair ({a}, {b}); "
                    "the congruence condition does not hold")
    return ClassModule(e=e, basis=cls, action=tuple(mats))


@dataclass(frozen=True, eq=False)
class HomSpace:
    """Module homomorphisms from the L~(e) span to the L~(f) span.

    ``basis`` is the canonical nullspace basis of the intertwining system;
    ``alphas`` lists the elements with plus = e and star = f, whose
    right-multiplication matrices lie in the space.  ``ralpha_is_basis``
    records whether those matrices form a basis (they do under the
    generalized right ample identity plus the order condition).
    """

    e: int
    f: int
    dim: int
    basis: tuple
    alphas: tuple[int, ...]
    ralpha_matrices: tuple[np.ndarray, ...]
    ralpha_is_basis: bool


def hom_space(es: EStructure, e: int, f: int) -> HomSpace:
    """Solve F . (action on e) = (action on f) . F for all semigroup elements."""
    mod_e = ltilde_module(es, e)
    mod_f = ltilde_module(es, f)
    de, df = len(mod_e.basis), len(mod_f.basis)
    n = es.size
    # unknown F is df x de, flattened row-major: u[r*de + c] = F[r, c]
    rows = []
    for t in range(n):
        ae = mod_e.action[t]
        af = mod_f.action[t]
        for r in range(df):
            for c in range(de):
                coeffs = [Fraction(0)] * (df * de)
                for k in range(de):
                    if ae[k, c]:
                        coeffs[r * de + k] += 1
                for k in range(df):
                    if af[r, k]:
                        coeffs[k * de + c] -= 1
                if any(coeffs):
                    rows.append(coeffs)
    basis = tuple(nullspace(rows, df * de)) if rows else tuple(
        tuple(Fraction(1) if i == j else Fraction(0) for j in range(df * de))
        for i in range(df * de))
    dim = len(basis)

    alphas = tuple(a for a in range(n) if es.plus[a] == e and es.star[a] == f)
    pos_f = {x: k for k, x in enumerate(mod_f.basis)}
    ralpha = []
    for a in alphas:
        m = np.zeros((df, de), dtype=np.int64)
        for c, x in enumerate(mod_e.basis):
            m[pos_f[es.mul(x, a)], c] = 1
        m.setflags(write=False)
        ralpha.append(m)
    contained = all(
        all(np.array_equal(m @ mod_e.action[t], mod_f.action[t] @ m) for t in range(n))
        for m in ralpha
    )
    if ralpha:
        stacked = [[Fraction(int(m[r, c])) for r in range(df) for c in range(de)]
                   for m in ralpha]
        _, pivots = row_reduce(stacked)
        independent = len(pivots) == len(ralpha)
    else:
        independent = True
    ralpha_is_basis = contained and independent and dim == len(alphas)
    return HomSpace(e=e, f=f, dim=dim, basis=basis, alphas=alphas,
                    ralpha_matrices=tuple(ralpha), ralpha_is_basis=ralpha_is_basis)


def phi_module_iso(es: EStructure, e: int, cat: FiniteCategory | None = None) -> bool:
    """Verify that x -> C(x) intertwines the L~(e) module with the projective
    column of the category algebra at e, and is bijective.

    The star action on the category side is s . m = phi(s) * m, computed in
    the category algebra.
    """
    if cat is None:
        cat = associated_category(es)
    calg = category_algebra(cat)
    cls = es.ltilde(e)
    cls_set = set(cls)
    # basis of the projective column: morphisms whose domain object is e
    col_basis = tuple(m for m in range(cat.n_morphisms)
                      if cat.dom[m] == es.e_position[e])
    if col_basis != cls:
        return False
    phi_mat = phi(es)
    n = es.size
    phi_cols = [AlgebraElement.make(calg.tag,
                                    {i: v for i, v in enumerate(phi_mat.column(s_))
                                     if v})
                for s_ in range(n)]
    for t in range(n):
        for x in cls:
            tx = es.mul(t, x)
            lhs = (calg.basis(tx) if tx in cls_set else calg.zero())
            rhs = calg.mult(phi_cols[t], calg.basis(x))
            if any(i not in cls_set for i, _ in rhs.items):
                return False
            if lhs != rhs:
                return False
    return True


def peirce_dims(c: FiniteCategory) -> np.ndarray:
    """Hom-set sizes: entry (e, f) counts morphisms with domain e, codomain f."""
    out = np.zeros((c.n_objects, c.n_objects), dtype=np.int64)
    for m in range(c.n_morphisms):
        out[c.dom[m], c.cod[m]] += 1
    out.setflags(write=False)
    return out


# ---------------------------------------------------------------------------
# Semisimplicity over the rationals
# ---------------------------------------------------------------------------

def _solve_unit(algebra: Algebra) -> AlgebraElement | None:
    """Solve for a two-sided unit by exact linear algebra; None if there is none."""
    n = algebra.dim
    bp = algebra.basis_product
    rows, rhs = [], []
    for j in range(n):
        for target in range(n):
            left = [Fraction(0)] * n
            right = [Fraction(0)] * n
            for i in range(n):
                if bp(i, j) == target:
                    left[i] += 1
                if bp(j, i) == target:
                    right[i] += 1
            want = Fraction(1 if target == j else 0)
            rows.append(left)
            rhs.append(want)
            rows.append(right)
            rhs.append(want)
    aug = sorted({tuple(row) + (b,) for row, b in zip(rows, rhs)}, reverse=True)
    red, pivots = row_reduce([list(r) for r in aug])
    if n in pivots:
        return None  # inconsistent
    sol = [Fraction(0)] * n
    for r, pc in enumerate(pivots):
        sol[pc] = red[r][n]
    unit = AlgebraElement.make(algebra.tag, dict(enumerate(sol)))
    for j in range(n):
        b = algebra.basis(j)
        if algebra.mult(unit, b) != b or algebra.mult(b, unit) != b:
            return None
    return unit


def is_semisimple_char0(algebra: Algebra, unit: AlgebraElement | None = None,
                        field=QQ) -> bool:
    """Semisimplicity via the trace form of the regular representation.

    For a finite-dimensional unital algebra over the rationals the radical
    is the kernel of B(x, y) = trace(left multiplication by xy), so the
    algebra is semisimple iff the Gram matrix of B is nonsingular.  Only
    valid in characteristic zero.
    """
    if field is not QQ:
        raise WrongCharacteristic("the trace-form criterion needs characteristic 0")
    unit = unit or algebra.unit or _solve_unit(algebra)
    if unit is None:
        raise NoUnit("the algebra has no two-sided unit")
    n = algebra.dim
    bp = algebra.basis_product
    trace_left = [0] * n  # trace of left multiplication by basis k
    for k in range(n):
        trace_left[k] = sum(1 for m in range(n) if bp(k, m) == m)
    gram = []
    for i in range(n):
        row = []
        for j in range(n):
            k = bp(i, j)
            row.append(Fraction(0) if k is None else Fraction(trace_left[k]))
        gram.append(row)
    return LinearMap.from_rows(gram).rank() == n
