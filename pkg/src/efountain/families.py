"""Concrete monoid families built from order-preserving maps.

* ``of``      order-preserving maps on {1..n} fixing n; elements biject with
              pairs of equal-size subsets X, Y of {1..n-1} (kernel-class maxima
              and image, the last point dropped).
* ``catalan`` the order-increasing members of ``of``: the pairs with X <= Y
              pointwise; sized by the Catalan numbers.
* ``io``      order-preserving partial injections on {1..n}; pairs X, Y over
              {1..n} (domain and image).  An inverse monoid.
* ``ic``      the order-increasing partial injections: X <= Y pointwise.

Elements are enumerated by (|X|, X, Y) with subsets as bitmasks, products are
computed by actual map composition, with the right factor applied first
(g after f composes as g*f, i.e. (g*f)(x) = g(f(x))).

The module also provides the natural partial order of an inverse monoid, the
Moebius function of a finite poset, the Moebius-inversion map psi from the
category algebra of ``io`` back to its monoid algebra, and the end-to-end
algebra isomorphisms (of at n+1 onto io at n, catalan at n+1 onto ic at n).
"""

from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import numpy as np

from efountain.algebras import (
    category_algebra,
    check_algebra_hom,
    check_iso,
    phi,
    semigroup_algebra,
)
from efountain.categories import (
    FiniteCategory,
    associated_category,
    is_functor_iso,
)
from efountain.fountain import EStructure, PartialMap, Verdict, build_estructure
from efountain.linalg import LinearMap, identity_map
from efountain.semigroups import FiniteSemigroup, from_table, idempotents, is_inverse

__all__ = [
    "AlgebraIso",
    "MapFamily",
    "NotInverse",
    "NotPartialOrder",
    "SubsetPair",
    "build_catalan",
    "build_ic",
    "build_io",
    "build_of",
    "catalan_number",
    "iso_c_ic",
    "iso_of_io",
    "mask_to_set",
    "mobius",
    "natural_order",
    "natural_order_matrix",
    "of_map",
    "of_pair",
    "psi",
    "subset_pairs",
]


class NotInverse(ValueError):
    pass


class NotPartialOrder(ValueError):
    pass


def catalan_number(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def mask_to_set(mask: int) -> tuple[int, ...]:
    """Bitmask -> ascending 1-based members (bit i-1 encodes i)."""
    out = []
    while mask:
        b = (mask & -mask).bit_length()
        out.append(b)
        mask &= mask - 1
    return tuple(out)


def _dominated(xmask: int, ymask: int) -> bool:
    """Pointwise x_i <= y_i on the sorted members (equal sizes assumed)."""
    xs, ys = mask_to_set(xmask), mask_to_set(ymask)
    return all(a <= b for a, b in zip(xs, ys))


@dataclass(frozen=True)
class SubsetPair:
    """A pair of equal-size subsets of {1..m}, stored as bitmasks."""

    m: int
    x: int
    y: int

    def __post_init__(self):
        if self.x >> self.m or self.y >> self.m:
            raise ValueError("subset bits outside the ambient range")
        if self.x.bit_count() != self.y.bit_count():
            raise ValueError("the two subsets must have equal size")


def subset_pairs(m: int, increasing_only: bool = False) -> tuple[SubsetPair, ...]:
    """All pairs over {1..m}, sorted by (size, x, y); optionally only x <= y."""
    by_size: dict[int, list[int]] = {}
    for mask in range(1 << m):
        by_size.setdefault(mask.bit_count(), []).append(mask)
    pairs = []
    for size in sorted(by_size):
        masks = sorted(by_size[size])
        for x in masks:
            for y in masks:
                if increasing_only and not _dominated(x, y):
                    continue
                pairs.append(SubsetPair(m, x, y))
    return tuple(pairs)


# ---------------------------------------------------------------------------
# Total maps fixing the top point
# ---------------------------------------------------------------------------

def of_map(n: int, x: int, y: int) -> tuple[int, ...]:
    """The order-preserving map on {1..n} fixing n encoded by (X, Y).

    With X = {x_1 < .. < x_l} and Y = {y_1 < .. < y_l}: points up to x_1 go
    to y_1, points in (x_{i-1}, x_i] go to y_i, points past x_l go to n.
    Images are returned 0-based.
    """
    xs = mask_to_set(x)
    ys = mask_to_set(y)
    images = []
    for p in range(1, n + 1):
        i = bisect_left(xs, p)
        images.append((ys[i] if i < len(xs) else n) - 1)
    return tuple(images)


def of_pair(n: int, images: tuple[int, ...]) -> tuple[int, int]:
    """Inverse of of_map: recover (X, Y) from a map's 0-based images.

    X collects the largest point of each kernel class except the top one;
    Y is the image with n removed.
    """
    runs = []
    for p in range(n):
        if p + 1 < n and images[p + 1] == images[p]:
            continue
        runs.append((p + 1, images[p] + 1))  # (max of the run, its image), 1-based
    x = y = 0
    for mx, img in runs[:-1]:
        x |= 1 << (mx - 1)
        y |= 1 << (img - 1)
    return x, y


def _compose_total(f: tuple[int, ...], g: tuple[int, ...]) -> tuple[int, ...]:
    """f after g."""
    return tuple(f[v] for v in g)


def _io_pmap(n: int, x: int, y: int) -> PartialMap:
    """The order-preserving partial injection sending the k-th point of X to
    the k-th point of Y (0-based positions)."""
    xs = mask_to_set(x)
    ys = mask_to_set(y)
    images: list[int | None] = [None] * n
    for a, b in zip(xs, ys):
        images[a - 1] = b - 1
    return PartialMap(n, n, tuple(images))


def _pmap_pair(pm: PartialMap) -> tuple[int, int]:
    x = y = 0
    for p, v in enumerate(pm.images):
        if v is not None:
            x |= 1 << p
            y |= 1 << v
    return x, y


@dataclass(frozen=True, eq=False)
class MapFamily:
    """A built family member: the semigroup, its canonical reduced E-Fountain
    structure (E = the diagonal pairs), and the subset-pair indexing."""

    kind: str
    n: int
    semigroup: FiniteSemigroup
    estructure: EStructure
    pairs: tuple[SubsetPair, ...]
    maps: tuple

    @cached_property
    def pair_index(self) -> dict[tuple[int, int], int]:
        return {(p.x, p.y): i for i, p in enumerate(self.pairs)}

    def index_of(self, x: int, y: int) -> int:
        return self.pair_index[(x, y)]

    @property
    def size(self) -> int:
        return self.semigroup.size


def _of_label(images: tuple[int, ...]) -> str:
    return ",".join(str(v + 1) for v in images)


def _io_label(pm: PartialMap) -> str:
    parts = [f"{p + 1}>{v + 1}" for p, v in enumerate(pm.images) if v is not None]
    return ",".join(parts) if parts else "-"


def build_of(n: int) -> MapFamily:
    """The monoid of order-preserving self-maps of {1..n} with the top point
    fixed.  Asserts the pair correspondence and the central binomial count."""
    if n < 1:
        raise ValueError("n must be >= 1")
    pairs = subset_pairs(n - 1)
    maps = tuple(of_map(n, p.x, p.y) for p in pairs)
    index = {mp: i for i, mp in enumerate(maps)}
    assert len(index) == len(maps)
    for p, mp in zip(pairs, maps):
        assert of_pair(n, mp) == (p.x, p.y)
    size = len(maps)
    assert size == math.comb(2 * n - 2, n - 1)
    table = [[index[_compose_total(maps[i], maps[j])] for j in range(size)]
             for i in range(size)]
    s = from_table(table, labels=[_of_label(mp) for mp in maps])
    E = [i for i, p in enumerate(pairs) if p.x == p.y]
    es = build_estructure(s, E)
    return MapFamily(kind="of", n=n, semigroup=s, estructure=es,
                     pairs=pairs, maps=maps)


def build_catalan(n: int) -> MapFamily:
    """The Catalan monoid: order-preserving, order-increasing self-maps of
    {1..n}; the diagonal pairs are exactly its idempotents."""
    if n < 1:
        raise ValueError("n must be >= 1")
    pairs = subset_pairs(n - 1, increasing_only=True)
    maps = tuple(of_map(n, p.x, p.y) for p in pairs)
    index = {mp: i for i, mp in enumerate(maps)}
    size = len(maps)
    assert size == catalan_number(n)
    table = []
    for i in range(size):
        row = []
        for j in range(size):
            prod = _compose_total(maps[i], maps[j])
            assert prod in index, "product left the order-increasing submonoid"
            row.append(index[prod])
        table.append(row)
    s = from_table(table, labels=[_of_label(mp) for mp in maps])
    E = [i for i, p in enumerate(pairs) if p.x == p.y]
    assert tuple(E) == idempotents(s)
    es = build_estructure(s, E)
    return MapFamily(kind="catalan", n=n, semigroup=s, estructure=es,
                     pairs=pairs, maps=maps)


def _build_partial(kind: str, n: int, increasing_only: bool) -> MapFamily:
    pairs = subset_pairs(n, increasing_only=increasing_only)
    pmaps = tuple(_io_pmap(n, p.x, p.y) for p in pairs)
    pair_pos = {(p.x, p.y): i for i, p in enumerate(pairs)}
    size = len(pairs)
    table = []
    for i in range(size):
        row = []
        for j in range(size):
            prod = pmaps[i].compose(pmaps[j])
            key = _pmap_pair(prod)
            assert key in pair_pos, "composition left the family"
            row.append(pair_pos[key])
        table.append(row)
    s = from_table(table, labels=[_io_label(pm) for pm in pmaps])
    E = [i for i, p in enumerate(pairs) if p.x == p.y]
    assert tuple(E) == idempotents(s)
    es = build_estructure(s, E)
    return MapFamily(kind=kind, n=n, semigroup=s, estructure=es,
                     pairs=pairs, maps=pmaps)


def build_io(n: int) -> MapFamily:
    """The inverse monoid of order-preserving partial injections of {1..n}."""
    if n < 0:
        raise ValueError("n must be >= 0")
    fam = _build_partial("io", n, increasing_only=False)
    assert fam.size == sum(math.comb(n, k) ** 2 for k in range(n + 1))
    assert is_inverse(fam.semigroup)
    return fam


def build_ic(n: int) -> MapFamily:
    """The order-increasing partial injections of {1..n}; not inverse, but a
    reduced E-Fountain monoid with the same idempotents as the io family."""
    if n < 0:
        raise ValueError("n must be >= 0")
    fam = _build_partial("ic", n, increasing_only=True)
    assert fam.size == catalan_number(n + 1)
    return fam


def build_family(selector: str) -> MapFamily:
    """Parse a family selector string: of:n, catalan:n, io:n, ic:n."""
    try:
        kind, _, num = selector.partition(":")
        n = int(num)
    except ValueError:
        raise ValueError(f"bad family selector {selector!r}") from None
    builders = {"of": build_of, "catalan": build_catalan,
                "io": build_io, "ic": build_ic}
    if kind not in builders:
        raise ValueError(f"unknown family kind {kind!r}")
    return builders[kind](n)


# ---------------------------------------------------------------------------
# Natural order, Moebius function, and the inversion map psi
# ---------------------------------------------------------------------------

def natural_order(s: FiniteSemigroup, tau: int, theta: int) -> bool:
    """The natural partial order of an inverse semigroup:
    tau <= theta iff tau = theta*e for some idempotent e."""
    if not is_inverse(s):
        raise NotInverse("the natural order needs an inverse semigroup")
    return any(s.mul(theta, e) == tau for e in idempotents(s))


def natural_order_matrix(s: FiniteSemigroup) -> np.ndarray:
    """Dense boolean matrix of the natural order (leq[a, b] iff a <= b)."""
    if not is_inverse(s):
        raise NotInverse("the natural order needs an inverse semigroup")
    n = s.size
    idem = idempotents(s)
    leq = np.zeros((n, n), dtype=bool)
    for b in range(n):
        for e in idem:
            leq[s.mul(b, e), b] = True
    leq.setflags(write=False)
    return leq


def mobius(leq) -> dict[tuple[int, int], int]:
    """Moebius function of a finite poset given as a boolean leq matrix.

    Validates the partial-order axioms, computes mu by the interval
    recursion mu(x,x) = 1, mu(x,y) = -sum of mu(x,z) over x <= z < y, and
    verifies the delta identity before returning {(x, y): mu(x, y)}.
    """
    m = np.asarray(leq, dtype=bool)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise NotPartialOrder("leq must be a square matrix")
    n = m.shape[0]
    if not all(m[i, i] for i in range(n)):
        raise NotPartialOrder("not reflexive")
    if np.any(m & m.T & ~np.eye(n, dtype=bool)):
        raise NotPartialOrder("not antisymmetric")
    closure = (m.astype(np.int64) @ m.astype(np.int64)) > 0
    if np.any(closure & ~m):
        raise NotPartialOrder("not transitive")

    below_count = m.sum(axis=0)
    topo = sorted(range(n), key=lambda v: (int(below_count[v]), v))
    mu: dict[tuple[int, int], int] = {}
    for x in range(n):
        for y in topo:
            if not m[x, y]:
                continue
            if x == y:
                mu[(x, y)] = 1
            else:
                mu[(x, y)] = -sum(mu[(x, z)] for z in range(n)
                                  if m[x, z] and m[z, y] and z != y)
    for x in range(n):
        for y in range(n):
            if m[x, y]:
                total = sum(mu[(z, y)] for z in range(n) if m[x, z] and m[z, y])
                assert total == (1 if x == y else 0), "delta identity fails"
    return mu


def psi(io: MapFamily, verify: bool = True) -> LinearMap:
    """Moebius inversion from the category algebra of the io family back to
    its monoid algebra: column C(theta) = sum of mu(tau, theta) * tau over
    tau <= theta in the natural order.

    With ``verify`` the map is checked to be an algebra isomorphism and a
    two-sided inverse of the structural map phi.
    """
    if io.kind != "io":
        raise NotInverse("psi is defined for the io family")
    s = io.semigroup
    n = s.size
    leq = natural_order_matrix(s)
    mu = mobius(leq)
    rows = [[Fraction(0)] * n for _ in range(n)]
    for theta in range(n):
        for tau in range(n):
            if leq[tau, theta]:
                rows[tau][theta] = Fraction(mu[(tau, theta)])
    out = LinearMap.from_rows(rows)
    if verify:
        cat = associated_category(io.estructure)
        hom = check_algebra_hom(out, category_algebra(cat), semigroup_algebra(s))
        assert hom.holds, f"psi is not multiplicative at {hom.witness}"
        assert check_iso(out)
        phi_mat = phi(io.estructure)
        ident = identity_map(n)
        assert out @ phi_mat == ident and phi_mat @ out == ident
    return out


# ---------------------------------------------------------------------------
# End-to-end algebra isomorphisms
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class AlgebraIso:
    """A verified linear map between two monoid algebras."""

    source: MapFamily
    target: MapFamily
    matrix: LinearMap
    hom: Verdict
    invertible: bool
    unit_preserved: bool

    @property
    def verified(self) -> bool:
        return self.hom.holds and self.invertible and self.unit_preserved


def _check_unit_preserved(M: LinearMap, src: MapFamily, dst: MapFamily) -> bool:
    src_id = src.semigroup.identity
    dst_id = dst.semigroup.identity
    if src_id is None or dst_id is None:
        return False
    col = M.column(src_id)
    return all(v == (1 if i == dst_id else 0) for i, v in enumerate(col))


def _identify_categories(c1: FiniteCategory, c2: FiniteCategory,
                         fam1: MapFamily, fam2: MapFamily) -> None:
    """The two families enumerate the same subset pairs, so the identity maps
    must give a category isomorphism; verify rather than trust."""
    assert [(p.x, p.y) for p in fam1.pairs] == [(p.x, p.y) for p in fam2.pairs]
    assert is_functor_iso(c1, c2, range(c1.n_objects), range(c1.n_morphisms))


def iso_of_io(n: int) -> AlgebraIso:
    """The rational algebra isomorphism from the of family at n+1 onto the io
    family at n: Moebius inversion composed with the structural map, through
    the shared associated category (objects: subsets of {1..n})."""
    of = build_of(n + 1)
    io = build_io(n)
    _identify_categories(associated_category(of.estructure),
                         associated_category(io.estructure), of, io)
    M = psi(io) @ phi(of.estructure)
    hom = check_algebra_hom(M, semigroup_algebra(of.semigroup),
                            semigroup_algebra(io.semigroup))
    return AlgebraIso(source=of, target=io, matrix=M, hom=hom,
                      invertible=check_iso(M),
                      unit_preserved=_check_unit_preserved(M, of, io))


def iso_c_ic(n: int) -> AlgebraIso:
    """The analogous isomorphism from the catalan family at n+1 onto the ic
    family at n.  The ic family is not inverse, so Moebius inversion is
    replaced by the exact matrix inverse of its structural map."""
    cat_fam = build_catalan(n + 1)
    ic = build_ic(n)
    _identify_categories(associated_category(cat_fam.estructure),
                         associated_category(ic.estructure), cat_fam, ic)
    phi_ic = phi(ic.estructure)
    psi_ic = phi_ic.inverse()
    M = psi_ic @ phi(cat_fam.estructure)
    hom = check_algebra_hom(M, semigroup_algebra(cat_fam.semigroup),
                            semigroup_algebra(ic.semigroup))
    return AlgebraIso(source=cat_fam, target=ic, matrix=M, hom=hom,
                      invertible=check_iso(M),
                      unit_preserved=_check_unit_preserved(M, cat_fam, ic))


def of_lex_leq(fam: MapFamily, i: int, j: int) -> bool:
    """The lexicographic order on of-family elements: (X1,Y1) below (X2,Y2)
    when Y1 is a proper subset of Y2, or Y1 = Y2 and X1 <= X2 pointwise."""
    p, q = fam.pairs[i], fam.pairs[j]
    if p.y == q.y:
        return _dominated(p.x, q.x)
    return (p.y & q.y) == p.y  # proper subset since masks differ
