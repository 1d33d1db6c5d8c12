"""Exact linear algebra over the rationals, with an optional prime-field mode.

Everything here is plain Gaussian elimination on dense matrices of field
elements; at the sizes this library works with (a few hundred at most)
nothing cleverer is warranted.  Rational arithmetic uses fractions.Fraction,
so results are exact and runs are reproducible bit for bit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "GF",
    "LinearMap",
    "QQ",
    "RationalField",
    "PrimeField",
    "identity_map",
    "nullspace",
    "row_reduce",
]


class RationalField:
    """The rationals, as a field object (zero / one / from_int)."""

    name = "QQ"
    zero = Fraction(0)
    one = Fraction(1)

    @staticmethod
    def from_int(n: int) -> Fraction:
        return Fraction(n)

    def __repr__(self):
        return "QQ"


QQ = RationalField()


@dataclass(frozen=True)
class FpElement:
    value: int
    p: int

    def _coerce(self, other):
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise ValueError("mixed prime fields")
            return other
        if isinstance(other, int):
            return FpElement(other % self.p, self.p)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        return FpElement((self.value + other.value) % self.p, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        return FpElement((self.value - other.value) % self.p, self.p)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return FpElement((self.value * other.value) % self.p, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other.value == 0:
            raise ZeroDivisionError("division by zero in GF(p)")
        return self * FpElement(pow(other.value, -1, self.p), self.p)

    def __neg__(self):
        return FpElement((-self.value) % self.p, self.p)

    def __bool__(self):
        return self.value != 0


class PrimeField:
    """GF(p) for a prime p; a faster drop-in coefficient field."""

    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.name = f"GF({p})"
        self.zero = FpElement(0, p)
        self.one = FpElement(1, p)

    def from_int(self, n: int) -> FpElement:
        return FpElement(n % self.p, self.p)

    def __repr__(self):
        return self.name


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def row_reduce(rows: list[list], field=QQ) -> tuple[list[list], list[int]]:
    """Reduced row echelon form; returns (rows, pivot column indices).

    The input is not mutated.  Deterministic: pivots are chosen as the first
    nonzero entry scanning down each column.
    """
    m = [list(r) for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        pv = m[r][c]
        m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def nullspace(rows: list[list], ncols: int, field=QQ) -> list[tuple]:
    """Canonical basis of the right kernel: one vector per free column,
    with a 1 in the free position."""
    red, pivots = row_reduce(rows, field)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [field.zero] * ncols
        v[fc] = field.one
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(tuple(v))
    return basis


@dataclass(frozen=True)
class LinearMap:
    """A dense exact matrix, column j = image of source basis vector j."""

    rows: int
    cols: int
    entries: tuple[tuple, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError(
                f"matrix shape mismatch: declared {self.rows}x{self.cols}")

    @classmethod
    def from_rows(cls, rows: list[list]) -> "LinearMap":
        entries = tuple(tuple(r) for r in rows)
        return cls(len(entries), len(entries[0]) if entries else 0, entries)

    def entry(self, i: int, j: int):
        return self.entries[i][j]

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self.entries)

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        if self.cols != other.rows:
            raise ValueError(f"cannot compose {self.rows}x{self.cols} with "
                             f"{other.rows}x{other.cols}")
        cols_t = list(zip(*other.entries))
        out = []
        for row in self.entries:
            out_row = []
            for col in cols_t:
                acc = None
                for a, b in zip(row, col):
                    term = a * b
                    acc = term if acc is None else acc + term
                out_row.append(acc)
            out.append(out_row)
        return LinearMap.from_rows(out)

    def apply(self, vec) -> tuple:
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        out = []
        for row in self.entries:
            acc = None
            for a, b in zip(row, vec):
                term = a * b
                acc = term if acc is None else acc + term
            out.append(acc)
        return tuple(out)

    def transpose(self) -> "LinearMap":
        return LinearMap.from_rows([list(r) for r in zip(*self.entries)])

    def to_field(self, field) -> "LinearMap":
        """Reinterpret rational entries in another coefficient field."""
        def conv(v):
            f = Fraction(v)
            x = field.from_int(f.numerator)
            if f.denominator != 1:
                x = x / field.from_int(f.denominator)
            return x
        return LinearMap.from_rows([[conv(v) for v in row] for row in self.entries])

    def rank(self, field=QQ) -> int:
        _, pivots = row_reduce([list(r) for r in self.entries], field)
        return len(pivots)

    def is_invertible(self, field=QQ) -> bool:
        return self.rows == self.cols and self.rank(field) == self.rows

    def det(self, field=QQ):
        """Determinant by fraction-free-ish elimination (exact)."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        m = [list(r) for r in self.entries]
        n = self.rows
        det = field.one
        for c in range(n):
            pivot = next((i for i in range(c, n) if m[i][c]), None)
            if pivot is None:
                return field.zero
            if pivot != c:
                m[c], m[pivot] = m[pivot], m[c]
                det = -det
            det = det * m[c][c]
            inv = field.one / m[c][c]
            for i in range(c + 1, n):
                if m[i][c]:
                    f = m[i][c] * inv
                    m[i] = [a - f * b for a, b in zip(m[i], m[c])]
        return det

    def inverse(self, field=QQ) -> "LinearMap":
        if self.rows != self.cols:
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        aug = [
            list(row) + [field.one if i == j else field.zero for j in range(n)]
            for i, row in enumerate(self.entries)
        ]
        red, pivots = row_reduce(aug, field)
        if pivots != list(range(n)):
            raise ValueError("matrix is singular")
        return LinearMap.from_rows([row[n:] for row in red[:n]])

    def to_json_obj(self) -> dict:
        """Row-major {rows, cols, entries: [[num, den], ...]} (rationals only)."""
        ents = []
        for row in self.entries:
            for v in row:
                f = Fraction(v)
                ents.append([f.numerator, f.denominator])
        return {"rows": self.rows, "cols": self.cols, "entries": ents}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "LinearMap":
        rows, cols = int(obj["rows"]), int(obj["cols"])
        flat = [Fraction(int(n), int(d)) for n, d in obj["entries"]]
        if len(flat) != rows * cols:
            raise ValueError("entry count does not match rows*cols")
        return cls(rows, cols,
                   tuple(tuple(flat[i * cols:(i + 1) * cols]) for i in range(rows)))


def identity_map(n: int, field=QQ) -> LinearMap:
    return LinearMap(n, n, tuple(
        tuple(field.one if i == j else field.zero for j in range(n))
        for i in range(n)
    ))
