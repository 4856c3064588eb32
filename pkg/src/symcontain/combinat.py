"""Membership predicates and enumeration for the adapted ring bases.

Almost collinear points use elements ``H_i y^j z^l`` named by ``AcElem(i, j, l)``;
nearly complete intersections use ``x^a y^b z^c F^d`` (``c < n``) named by
``NciElem(a, b, c, d)``.  Whether an element lies in ``I^(m)`` or ``I^r`` is a
system of linear inequalities on the exponents, so graded dimensions and
non-containment witnesses reduce to counting and scanning lattice points.
"""

from __future__ import annotations

from typing import Iterator, NamedTuple, Optional

from .polyring import basis_poly, render


class AcElem(NamedTuple):
    i: int
    j: int
    l: int

    @property
    def degree(self) -> int:
        return self.i + self.j + self.l

    def to_json(self, cfg=None) -> dict:
        doc = {"i": self.i, "j": self.j, "l": self.l}
        if cfg is not None:
            doc["poly"] = render(basis_poly(cfg, self))
        return doc


class NciElem(NamedTuple):
    a: int
    b: int
    c: int
    d: int

    def degree(self, n: int) -> int:
        return self.a + self.b + self.c + self.d * n

    def to_json(self, cfg=None) -> dict:
        doc = {"a": self.a, "b": self.b, "c": self.c, "d": self.d}
        if cfg is not None:
            doc["poly"] = render(basis_poly(cfg, self))
        return doc


# -- almost collinear ----------------------------------------------------------

def ac_in_symbolic(n: int, e: AcElem, m: int) -> bool:
    i, j, l = e
    return i + l * n >= m * n and i + j >= m


def ac_in_power(n: int, e: AcElem, r: int) -> bool:
    i, j, l = e
    if l < j:
        return i + n * l >= r * n
    if l < i + j:
        return i + j + (n - 1) * l >= r * n
    return r <= i + j


def ac_witness(n: int, m: int, r: int) -> Optional[tuple[int, int]]:
    """Lexicographically smallest ``(i, l)`` with ``i >= m``, ``i + n l >= m n``,
    ``l <= i - 1`` and ``i + (n-1) l <= r n - 1``; None if there is none.

    The element ``H_i z^l`` then lies in ``I^(m)`` but not in ``I^r``.
    """
    if m < r:
        raise ValueError("lattice witnesses are defined for m >= r")
    for i in range(m, r * n):
        # smallest l meeting i + n l >= m n
        lo = max(0, -(-(m * n - i) // n))
        hi = min(i - 1, (r * n - 1 - i) // (n - 1))
        if lo <= hi:
            return i, lo
    return None


# -- nearly complete intersections -------------------------------------------

def nci_in_symbolic(e: NciElem, m: int) -> bool:
    a, b, _c, d = e
    return a + b >= m and min(a, b) + d >= m


def nci_in_power(e: NciElem, r: int) -> bool:
    a, b, _c, d = e
    return min(a, b) + d >= r and a + b + d >= 2 * r and a + b >= r


def nci_in_power_cases(e: NciElem, r: int) -> bool:
    """The same set described by a case split on ``d`` against ``|a - b|`` and ``a + b``."""
    a, b, _c, d = e
    lo, hi = min(a, b), max(a, b)
    if d <= hi - lo and not lo + d >= r:
        return False
    if hi - lo < d < a + b and not a + b + d >= 2 * r:
        return False
    if a + b <= d and not a + b >= r:
        return False
    return True


def nci_witness(m: int, r: int) -> Optional[NciElem]:
    """Canonical element of ``I^(m)`` outside ``I^r`` when ``4r > 3m + 1``."""
    if m < r:
        raise ValueError("canonical witnesses are defined for m >= r")
    if 4 * r <= 3 * m + 1:
        return None
    if m % 2 == 0:
        h = m // 2
        return NciElem(h, h, 0, h)
    return NciElem((m + 1) // 2, (m - 1) // 2, 0, (m + 1) // 2)


def nci_lattice_search(m: int, r: int) -> Optional[NciElem]:
    """Brute-force scan for ``x^a y^b F^d`` in ``I^(m)`` with ``a + b + d < 2r``."""
    for a in range(2 * r):
        for b in range(2 * r - a):
            for d in range(2 * r - a - b):
                e = NciElem(a, b, 0, d)
                if nci_in_symbolic(e, m):
                    return e
    return None


# -- enumeration -----------------------------------------------------------------

def _filter(cfg, ideal):
    if ideal is None or ideal == "all":
        return lambda e: True
    kind, k = ideal
    if cfg.kind == "ac":
        if kind == "symbolic":
            return lambda e: ac_in_symbolic(cfg.n, e, k)
        if kind == "power":
            return lambda e: ac_in_power(cfg.n, e, k)
    else:
        if kind == "symbolic":
            return lambda e: nci_in_symbolic(e, k)
        if kind == "power":
            return lambda e: nci_in_power(e, k)
    raise ValueError(f"unknown ideal filter {ideal!r}")


def basis_tuples(cfg, d: int) -> Iterator:
    """All ring-basis tuples of degree ``d`` in descending lex order."""
    if cfg.kind == "ac":
        for i in range(d, -1, -1):
            for j in range(d - i, -1, -1):
                yield AcElem(i, j, d - i - j)
        return
    n = cfg.n
    for a in range(d, -1, -1):
        for b in range(d - a, -1, -1):
            for c in range(min(n - 1, d - a - b), -1, -1):
                rest = d - a - b - c
                if rest % n == 0:
                    yield NciElem(a, b, c, rest // n)


def enumerate_basis(cfg, d: int, ideal=None) -> list:
    """Basis tuples of degree ``d`` passing ``ideal``.

    ``ideal`` is ``None``/``"all"``, ``("symbolic", m)`` or ``("power", r)``.
    """
    if d < 0:
        return []
    keep = _filter(cfg, ideal)
    return [e for e in basis_tuples(cfg, d) if keep(e)]


def hilbert_dim(cfg, ideal, d: int) -> int:
    return len(enumerate_basis(cfg, d, ideal))


def nci_sym_times_I(e: NciElem, m: int) -> bool:
    """Membership in ``I^(m) I`` for odd ``m``."""
    a, b, _c, d = e
    return (a + b >= m + 1 and min(a, b) + d >= m + 1
            and 2 * (a + b + d) >= 3 * m + 5)
