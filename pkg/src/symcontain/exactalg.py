"""Exact rationals and fraction-free linear algebra over Q.

Scalars are :class:`fractions.Fraction`.  Matrices are stored as tuples of
Fraction rows; the heavy lifting (rank, containment, kernels) is done on
integer rows obtained by clearing denominators, reduced fraction-free and
kept primitive (content divided out) so entries stay small.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

Rational = Fraction


def as_rational(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def format_rational(q) -> str:
    """Render as ``"p/q"`` (or ``"p"`` for integers)."""
    return str(as_rational(q))


def _primitive(row: list[int]) -> list[int]:
    g = 0
    for v in row:
        if v:
            g = gcd(g, v)
            if g == 1:
                return row
    if g > 1:
        return [v // g for v in row]
    return row


def _integer_row(row: Sequence) -> list[int]:
    """Scale a rational row to a primitive integer row with the same span."""
    fr = [as_rational(v) for v in row]
    den = 1
    for v in fr:
        if v.denominator != 1:
            den = lcm(den, v.denominator)
    return _primitive([int(v * den) for v in fr])


def _leading(row: list[int]) -> int:
    for k, v in enumerate(row):
        if v:
            return k
    return -1


class Echelon:
    """Incrementally built echelon basis of a row space.

    Rows are primitive integer vectors with pairwise distinct leading
    columns.  ``add`` returns True when the rank grows.
    """

    def __init__(self, cols: int):
        self.cols = cols
        self._pivots: dict[int, list[int]] = {}

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def reduce(self, row: Sequence) -> list[int]:
        v = _integer_row(row) if not _is_int_list(row) else list(row)
        if len(v) != self.cols:
            raise ValueError(f"row has {len(v)} entries, expected {self.cols}")
        piv = self._pivots
        k = _leading(v)
        while k >= 0 and k in piv:
            b = piv[k]
            bk, vk = b[k], v[k]
            g = gcd(bk, vk)
            s, t = bk // g, vk // g
            v = _primitive([s * a - t * c for a, c in zip(v, b)])
            k = _leading(v)
        return v

    def add(self, row: Sequence) -> bool:
        v = self.reduce(row)
        k = _leading(v)
        if k < 0:
            return False
        if v[k] < 0:
            v = [-a for a in v]
        self._pivots[k] = v
        return True

    def contains(self, row: Sequence) -> bool:
        return _leading(self.reduce(row)) < 0

    def rows(self) -> list[list[int]]:
        return [self._pivots[k] for k in sorted(self._pivots)]

    def reduced_rows(self) -> list[list[int]]:
        """Fully reduced (every pivot column cleared elsewhere) integer rows."""
        order = sorted(self._pivots)
        rows = {k: list(self._pivots[k]) for k in order}
        for k in reversed(order):
            pk = rows[k]
            for k2 in order:
                if k2 >= k:
                    break
                r = rows[k2]
                if r[k]:
                    g = gcd(pk[k], r[k])
                    s, t = pk[k] // g, r[k] // g
                    r = _primitive([s * a - t * c for a, c in zip(r, pk)])
                    if r[k2] < 0:
                        r = [-a for a in r]
                    rows[k2] = r
        return [rows[k] for k in order]


def _is_int_list(row) -> bool:
    return isinstance(row, list) and all(type(v) is int for v in row)


class ExactMatrix:
    """Dense matrix of Fractions; immutable."""

    __slots__ = ("rows", "ncols", "_rank")

    def __init__(self, rows: Iterable[Sequence], cols: int | None = None):
        rows = tuple(tuple(as_rational(v) for v in r) for r in rows)
        if cols is None:
            if not rows:
                raise ValueError("column count required for an empty matrix")
            cols = len(rows[0])
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged matrix rows")
        self.rows = rows
        self.ncols = cols
        self._rank = None

    @classmethod
    def identity(cls, size: int) -> "ExactMatrix":
        return cls([[int(i == j) for j in range(size)] for i in range(size)], size)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "ExactMatrix":
        return cls([[0] * ncols for _ in range(nrows)], ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def echelon(self) -> Echelon:
        e = Echelon(self.ncols)
        for r in self.rows:
            e.add(r)
        return e

    def rank(self) -> int:
        if self._rank is None:
            self._rank = self.echelon().rank
        return self._rank

    def stack(self, other: "ExactMatrix") -> "ExactMatrix":
        if other.ncols != self.ncols:
            raise ValueError("column counts differ")
        return ExactMatrix(self.rows + other.rows, self.ncols)

    def __eq__(self, other):
        return isinstance(other, ExactMatrix) and self.rows == other.rows and self.ncols == other.ncols

    def __hash__(self):
        return hash((self.rows, self.ncols))

    def __repr__(self):
        return f"ExactMatrix({self.nrows}x{self.ncols}, rank={self.rank()})"


def rank(M: ExactMatrix) -> int:
    return M.rank()


def row_space_contains(A: ExactMatrix, B: ExactMatrix) -> bool:
    """True iff every row of ``B`` lies in the row space of ``A``."""
    if A.ncols != B.ncols:
        raise ValueError(f"dimension mismatch: {A.ncols} vs {B.ncols} columns")
    e = A.echelon()
    return all(e.contains(r) for r in B.rows)


def nullspace_rows(rows: Iterable[Sequence], cols: int) -> list[list[int]]:
    """Integer basis of ``{v : r . v = 0 for every row r}``."""
    e = Echelon(cols)
    for r in rows:
        e.add(r)
    red = e.reduced_rows()
    pivcols = [_leading(r) for r in red]
    pivset = set(pivcols)
    basis = []
    for f in range(cols):
        if f in pivset:
            continue
        scale = 1
        for r, p in zip(red, pivcols):
            if r[f]:
                scale = lcm(scale, r[p])
        v = [0] * cols
        v[f] = scale
        for r, p in zip(red, pivcols):
            if r[f]:
                v[p] = -r[f] * scale // r[p]
        basis.append(_primitive(v))
    return basis


def nullspace(M: ExactMatrix) -> ExactMatrix:
    return ExactMatrix(nullspace_rows(M.rows, M.ncols), M.ncols)


def intersect_rows(A: Iterable[Sequence], B: Iterable[Sequence], cols: int) -> list[list[int]]:
    """Basis of the intersection of two row spaces, as ``(A^perp + B^perp)^perp``."""
    perp = nullspace_rows(A, cols) + nullspace_rows(B, cols)
    return nullspace_rows(perp, cols)
