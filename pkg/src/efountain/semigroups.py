"""Finite semigroups as dense multiplication tables, with classical Green's relations.

Elements are the indices 0..size-1.  ``table[i, j]`` is the product i*j.
The formal adjoined unit of S^1 is simulated wherever ideals are involved;
it is never stored as an element, so every table stays closed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

__all__ = [
    "FULL_CHECK_LIMIT",
    "FiniteSemigroup",
    "GreenData",
    "NotAssociative",
    "NotIdempotent",
    "NotRegular",
    "OutOfRangeEntry",
    "SemigroupError",
    "StructureFlags",
    "dump_table_text",
    "from_table",
    "green_classes",
    "idempotents",
    "is_inverse",
    "load_table_file",
    "natural_order_leq",
    "opposite_semigroup",
    "parse_table_text",
    "rho_hom_check",
    "structure_flags",
]

#: Exhaustive O(size^3) associativity checking is automatic up to this size;
#: above it the caller must opt in explicitly.
FULL_CHECK_LIMIT = 512


class SemigroupError(ValueError):
    """Invalid semigroup input."""


class OutOfRangeEntry(SemigroupError):
    def __init__(self, i: int, j: int, value: int, size: int):
        self.position = (i, j)
        self.value = value
        super().__init__(f"table[{i}][{j}] = {value} is outside 0..{size - 1}")


class NotAssociative(SemigroupError):
    def __init__(self, i: int, j: int, k: int):
        self.triple = (i, j, k)
        super().__init__(f"({i}*{j})*{k} != {i}*({j}*{k})")


class NotIdempotent(SemigroupError):
    def __init__(self, element: int):
        self.element = element
        super().__init__(f"element {element} is not idempotent")


class NotRegular(SemigroupError):
    def __init__(self, element: int):
        self.element = element
        super().__init__(f"element {element} has no generalized inverse")


@dataclass(frozen=True, eq=False)
class FiniteSemigroup:
    """An immutable finite semigroup.

    ``table`` is a read-only square numpy integer array; ``identity`` is the
    index of the two-sided identity when one exists (``is_monoid``).
    """

    table: np.ndarray
    labels: tuple[str, ...] | None = None
    identity: int | None = None

    @property
    def size(self) -> int:
        return int(self.table.shape[0])

    @property
    def is_monoid(self) -> bool:
        return self.identity is not None

    def mul(self, i: int, j: int) -> int:
        return int(self.table[i, j])

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels is not None else f"s{i}"

    def elements(self) -> range:
        return range(self.size)

    @cached_property
    def rows(self) -> tuple[tuple[int, ...], ...]:
        """Table rows as plain tuples, convenient for tight loops."""
        return tuple(tuple(int(v) for v in row) for row in self.table)


def _check_associative(table: np.ndarray) -> None:
    n = table.shape[0]
    for i in range(n):
        lhs = table[table[i]]          # lhs[j, k] = (i*j)*k
        rhs = table[i][table]          # rhs[j, k] = i*(j*k)
        if not np.array_equal(lhs, rhs):
            j, k = np.argwhere(lhs != rhs)[0]
            raise NotAssociative(i, int(j), int(k))


def _find_identity(table: np.ndarray) -> int | None:
    n = table.shape[0]
    ar = np.arange(n)
    for e in range(n):
        if np.array_equal(table[e], ar) and np.array_equal(table[:, e], ar):
            return e
    return None


def from_table(table, labels=None, *, full_check: bool | None = None) -> FiniteSemigroup:
    """Validate a multiplication table and wrap it as a FiniteSemigroup.

    Entries are range-checked always.  Associativity is proven by exhaustive
    check when ``full_check`` is True, skipped when False, and decided by
    ``size <= FULL_CHECK_LIMIT`` when None.
    """
    arr = np.array(table, dtype=np.intp)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
        raise SemigroupError(f"table must be square and nonempty, got shape {arr.shape}")
    n = arr.shape[0]
    bad = np.argwhere((arr < 0) | (arr >= n))
    if len(bad):
        i, j = (int(v) for v in bad[0])
        raise OutOfRangeEntry(i, j, int(arr[i, j]), n)
    if full_check is None:
        full_check = n <= FULL_CHECK_LIMIT
    if full_check:
        _check_associative(arr)
    if labels is not None:
        labels = tuple(str(x) for x in labels)
        if len(labels) != n:
            raise SemigroupError(f"expected {n} labels, got {len(labels)}")
    arr.setflags(write=False)
    return FiniteSemigroup(table=arr, labels=labels, identity=_find_identity(arr))


def opposite_semigroup(s: FiniteSemigroup) -> FiniteSemigroup:
    """The opposite semigroup: same elements, reversed multiplication."""
    t = s.table.T.copy()
    t.setflags(write=False)
    return FiniteSemigroup(table=t, labels=s.labels, identity=s.identity)


def idempotents(s: FiniteSemigroup) -> tuple[int, ...]:
    """Indices i with i*i = i, ascending."""
    t = s.table
    return tuple(i for i in range(s.size) if int(t[i, i]) == i)


def natural_order_leq(s: FiniteSemigroup, e: int, f: int) -> bool:
    """Natural partial order on idempotents: e <= f iff ef = e = fe."""
    for x in (e, f):
        if s.mul(x, x) != x:
            raise NotIdempotent(x)
    return s.mul(e, f) == e and s.mul(f, e) == e


def is_inverse(s: FiniteSemigroup) -> bool:
    """True iff every element has a unique generalized inverse."""
    n = s.size
    rows = s.rows
    for a in range(n):
        count = 0
        for b in range(n):
            if rows[rows[a][b]][a] == a and rows[rows[b][a]][b] == b:
                count += 1
                if count > 1:
                    return False
        if count != 1:
            return False
    return True


# ---------------------------------------------------------------------------
# Green's relations
# ---------------------------------------------------------------------------

def _group_classes(keys: list) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
    """Group indices by key; classes ordered by least member."""
    by_key: dict = {}
    for i, k in enumerate(keys):
        by_key.setdefault(k, []).append(i)
    classes = tuple(tuple(c) for c in sorted(by_key.values(), key=lambda c: c[0]))
    index = [0] * len(keys)
    for ci, cls in enumerate(classes):
        for i in cls:
            index[i] = ci
    return classes, tuple(index)


@dataclass(frozen=True, eq=False)
class GreenData:
    """Green's equivalence classes and the underlying ideal preorders.

    The ``*_below`` masks are bitsets: bit a of ``r_below[b]`` is set iff
    a <=_R b, i.e. a lies in the right ideal generated by b.
    """

    size: int
    r_classes: tuple[tuple[int, ...], ...]
    l_classes: tuple[tuple[int, ...], ...]
    j_classes: tuple[tuple[int, ...], ...]
    h_classes: tuple[tuple[int, ...], ...]
    r_index: tuple[int, ...]
    l_index: tuple[int, ...]
    j_index: tuple[int, ...]
    h_index: tuple[int, ...]
    r_below: tuple[int, ...]
    l_below: tuple[int, ...]
    j_below: tuple[int, ...]

    def r_leq(self, a: int, b: int) -> bool:
        return bool(self.r_below[b] >> a & 1)

    def l_leq(self, a: int, b: int) -> bool:
        return bool(self.l_below[b] >> a & 1)

    def j_leq(self, a: int, b: int) -> bool:
        return bool(self.j_below[b] >> a & 1)


def green_classes(s: FiniteSemigroup) -> GreenData:
    """Compute R, L, J, H classes and the three ideal preorders.

    aS^1, S^1a and S^1aS^1 are materialized as bitsets; the virtual unit
    only contributes the generator itself.  H = R meet L.
    """
    n = s.size
    rows = s.rows
    r_below = []
    for b in range(n):
        m = 1 << b
        for x in rows[b]:
            m |= 1 << x
        r_below.append(m)
    l_below = [1 << b for b in range(n)]
    for a in range(n):
        row = rows[a]
        for b in range(n):
            l_below[b] |= 1 << row[b]
    j_below = []
    for b in range(n):
        m = 0
        lb = l_below[b]
        while lb:
            c = (lb & -lb).bit_length() - 1
            lb &= lb - 1
            m |= r_below[c]
        j_below.append(m)

    r_classes, r_index = _group_classes(r_below)
    l_classes, l_index = _group_classes(l_below)
    j_classes, j_index = _group_classes(j_below)
    h_classes, h_index = _group_classes(list(zip(r_below, l_below)))
    return GreenData(
        size=n,
        r_classes=r_classes, l_classes=l_classes,
        j_classes=j_classes, h_classes=h_classes,
        r_index=r_index, l_index=l_index, j_index=j_index, h_index=h_index,
        r_below=tuple(r_below), l_below=tuple(l_below), j_below=tuple(j_below),
    )


@dataclass(frozen=True)
class StructureFlags:
    h_trivial: bool
    regular: bool


def structure_flags(s: FiniteSemigroup) -> StructureFlags:
    """H-triviality (all H-classes singletons) and von Neumann regularity."""
    green = green_classes(s)
    h_trivial = all(len(c) == 1 for c in green.h_classes)
    rows = s.rows
    n = s.size
    regular = all(any(rows[rows[a][b]][a] == a for b in range(n)) for a in range(n))
    return StructureFlags(h_trivial=h_trivial, regular=regular)


def rho_hom_check(s: FiniteSemigroup, alpha: int) -> bool:
    """Check that right translation by a regular element is a homomorphism of
    partial actions between classical L-classes.

    For the first generalized inverse beta of alpha (by index), set
    e = alpha*beta and f = beta*alpha.  The map x -> x*alpha from L_e to L_f
    is verified to be a bijection satisfying, for all s and x in L_e,
    ``s*x in L_e  iff  s*(x*alpha) in L_f`` with equality of images whenever
    defined.  S acts on an L-class by s.x = sx when sx stays in the class.
    """
    n = s.size
    rows = s.rows
    beta = None
    for b in range(n):
        if rows[rows[alpha][b]][alpha] == alpha and rows[rows[b][alpha]][b] == b:
            beta = b
            break
    if beta is None:
        raise NotRegular(alpha)
    e = rows[alpha][beta]
    f = rows[beta][alpha]
    green = green_classes(s)
    l_e = green.l_classes[green.l_index[e]]
    l_f = green.l_classes[green.l_index[f]]
    set_e = set(l_e)
    set_f = set(l_f)
    image = [rows[x][alpha] for x in l_e]
    if set(image) != set_f or len(set(image)) != len(l_e):
        return False
    for x in l_e:
        xa = rows[x][alpha]
        for t in range(n):
            tx = rows[t][x]
            lhs_defined = tx in set_e
            rhs_defined = rows[t][xa] in set_f
            if lhs_defined != rhs_defined:
                return False
            if lhs_defined and rows[tx][alpha] != rows[t][xa]:
                return False
    return True


# ---------------------------------------------------------------------------
# Multiplication-table text format
# ---------------------------------------------------------------------------
#
# line 1: the integer n
# lines 2..n+1: n space-separated 0-based indices (row i lists i*0 .. i*(n-1))
# '#' starts a comment line; an optional trailing "labels:" line is followed
# by n whitespace-separated tokens.

def parse_table_text(text: str) -> tuple[list[list[int]], tuple[str, ...] | None]:
    """Parse the table format into (grid, labels); no semigroup validation."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise SemigroupError("empty table file")
    try:
        n = int(lines[0])
    except ValueError:
        raise SemigroupError(f"first line must be the size, got {lines[0]!r}") from None
    if n < 1:
        raise SemigroupError(f"size must be >= 1, got {n}")
    if len(lines) < n + 1:
        raise SemigroupError(f"expected {n} table rows, found {len(lines) - 1}")
    grid = []
    for ln in lines[1:n + 1]:
        try:
            row = [int(tok) for tok in ln.split()]
        except ValueError:
            raise SemigroupError(f"bad table row: {ln!r}") from None
        if len(row) != n:
            raise SemigroupError(f"row has {len(row)} entries, expected {n}: {ln!r}")
        grid.append(row)
    labels = None
    rest = lines[n + 1:]
    if rest:
        head = rest[0]
        if not head.startswith("labels:"):
            raise SemigroupError(f"unexpected trailing line: {head!r}")
        toks = head[len("labels:"):].split()
        for ln in rest[1:]:
            toks.extend(ln.split())
        if len(toks) != n:
            raise SemigroupError(f"expected {n} labels, got {len(toks)}")
        labels = tuple(toks)
    return grid, labels


def dump_table_text(s: FiniteSemigroup) -> str:
    """Serialize to the table text format (bit-exact, deterministic)."""
    out = [str(s.size)]
    for i in range(s.size):
        out.append(" ".join(str(s.mul(i, j)) for j in range(s.size)))
    if s.labels is not None:
        out.append("labels:")
        out.append(" ".join(s.labels))
    return "\n".join(out) + "\n"


def load_table_file(path) -> FiniteSemigroup:
    with open(path, "r", encoding="utf-8") as fh:
        grid, labels = parse_table_text(fh.read())
    return from_table(grid, labels)
