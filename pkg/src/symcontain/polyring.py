"""Polynomials in x, y, z over Q.

A :class:`Poly` is a sparse map from exponent triples to nonzero Fractions.
Besides ring arithmetic this module provides the pieces the rest of the
package leans on: coefficient vectors on the monomial basis of ``R_d``,
linear changes of coordinates, vanishing orders at projective points, and
rewriting a form in the configuration-adapted bases (``H_i y^j z^l`` for
almost collinear points, ``x^a y^b z^c F^d`` with ``c < n`` for nearly
complete intersections).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .exactalg import as_rational

Exp = tuple[int, int, int]


class Poly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exp, object] | None = None):
        clean = {}
        if terms:
            for e, c in terms.items():
                c = as_rational(c)
                if c:
                    e = tuple(int(k) for k in e)
                    if len(e) != 3 or min(e) < 0:
                        raise ValueError(f"bad exponent {e}")
                    clean[e] = c
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "Poly":
        p = cls.__new__(cls)
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls({(0, 0, 0): c})

    @classmethod
    def monomial(cls, e: Exp, c=1) -> "Poly":
        return cls({tuple(e): c})

    @classmethod
    def linear(cls, cx, cy, cz) -> "Poly":
        return cls({(1, 0, 0): cx, (0, 1, 0): cy, (0, 0, 1): cz})

    @property
    def terms(self) -> dict[Exp, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, e: Exp) -> Fraction:
        return self._terms.get(tuple(e), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(other)
        return isinstance(other, Poly) and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return Poly()
            return Poly._raw({e: v * c for e, v in self._terms.items()})
        other = _coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exp, Fraction] = {}
        for (a1, b1, c1), u in self._terms.items():
            for (a2, b2, c2), v in other._terms.items():
                e = (a1 + a2, b1 + b2, c1 + c2)
                out[e] = out.get(e, 0) + u * v
        return Poly._raw({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Poly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __call__(self, x, y, z) -> Fraction:
        pt = (as_rational(x), as_rational(y), as_rational(z))
        total = Fraction(0)
        for (a, b, c), v in self._terms.items():
            total += v * pt[0] ** a * pt[1] ** b * pt[2] ** c
        return total

    def sorted_terms(self) -> list[tuple[Exp, Fraction]]:
        """Terms in descending lexicographic exponent order (x first)."""
        return sorted(self._terms.items(), reverse=True)

    def __str__(self):
        return render(self)

    def __repr__(self):
        return f"Poly({render(self)!r})"


def _coerce(other):
    if isinstance(other, Poly):
        return other
    if isinstance(other, (int, Fraction)):
        return Poly.constant(other)
    return NotImplemented


X = Poly.monomial((1, 0, 0))
Y = Poly.monomial((0, 1, 0))
Z = Poly.monomial((0, 0, 1))


def render(f: Poly) -> str:
    """Text form ``c*x^a*y^b*z^c + ...`` in descending lex order."""
    if f.is_zero():
        return "0"
    pieces = []
    for e, c in f.sorted_terms():
        factors = []
        for name, k in zip("xyz", e):
            if k == 1:
                factors.append(name)
            elif k > 1:
                factors.append(f"{name}^{k}")
        mag = abs(c)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = f"{mag}*" + "*".join(factors)
        pieces.append((c < 0, body))
    neg, body = pieces[0]
    out = ("-" if neg else "") + body
    for neg, body in pieces[1:]:
        out += (" - " if neg else " + ") + body
    return out


def poly_mul(f: Poly, g: Poly) -> Poly:
    return f * g


def graded_component(f: Poly, d: int) -> Poly:
    return Poly._raw({e: c for e, c in f.items() if sum(e) == d})


# -- monomial bases of R_d ---------------------------------------------------

@lru_cache(maxsize=None)
def monomials(d: int) -> tuple[Exp, ...]:
    """Exponents of degree ``d`` in descending lex order."""
    if d < 0:
        return ()
    return tuple((a, b, d - a - b) for a in range(d, -1, -1) for b in range(d - a, -1, -1))


@lru_cache(maxsize=None)
def monomial_index(d: int) -> dict[Exp, int]:
    return {e: k for k, e in enumerate(monomials(d))}


def ambient_dim(d: int) -> int:
    return (d + 1) * (d + 2) // 2 if d >= 0 else 0


def coeff_vector(f: Poly, d: int) -> list[Fraction]:
    idx = monomial_index(d)
    v = [Fraction(0)] * len(idx)
    for e, c in f.items():
        if sum(e) != d:
            raise ValueError(f"term {e} is not of degree {d}")
        v[idx[e]] = c
    return v


def from_vector(v: Sequence, d: int) -> Poly:
    return Poly({e: c for e, c in zip(monomials(d), v) if c})


# -- projective points and coordinate changes -------------------------------

class ProjPoint:
    """A point of P^2, normalized so its last nonzero coordinate is 1."""

    __slots__ = ("coords",)

    def __init__(self, x, y, z):
        c = [as_rational(x), as_rational(y), as_rational(z)]
        if not any(c):
            raise ValueError("[0:0:0] is not a projective point")
        last = next(v for v in reversed(c) if v)
        self.coords = tuple(v / last for v in c)

    def __eq__(self, other):
        return isinstance(other, ProjPoint) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __repr__(self):
        return "[" + ":".join(str(v) for v in self.coords) + "]"

    def to_json(self) -> list[str]:
        return [str(v) for v in self.coords]


def chart_matrix(p: ProjPoint, variant: int = 0) -> tuple[tuple[Fraction, ...], ...]:
    """An invertible 3x3 matrix whose third column is ``p``.

    Substituting ``(x, y, z) = A (u, v, w)`` moves ``p`` to ``[0:0:1]``
    in the ``(u, v, w)`` coordinates.  ``variant`` selects between
    different completions of the basis; the vanishing order does not
    depend on the choice.
    """
    cols = list(p.coords)
    k = max(i for i in range(3) if cols[i])
    others = [i for i in range(3) if i != k]
    e = [[Fraction(int(r == i)) for r in range(3)] for i in others]
    if variant:
        # shear both complementary columns by p and add the other basis vector
        e = [[e[0][r] + variant * cols[r] + e[1][r] for r in range(3)],
             [e[1][r] + 2 * variant * cols[r] for r in range(3)]]
    A = tuple(tuple((e[0][r], e[1][r], cols[r])) for r in range(3))
    if _det3(A) == 0:
        raise ValueError("degenerate chart")
    return A


def _det3(A) -> Fraction:
    (a, b, c), (d, e, f), (g, h, i) = A
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def substitute(f: Poly, A) -> Poly:
    """``f(A (u, v, w))`` written again in x, y, z (standing for u, v, w)."""
    lin = [Poly.linear(*row) for row in A]
    powers: list[dict[int, Poly]] = [{0: Poly.constant(1)} for _ in range(3)]

    def pw(k, e):
        cache = powers[k]
        if e not in cache:
            cache[e] = pw(k, e - 1) * lin[k]
        return cache[e]

    out = Poly()
    for (a, b, c), coef in f.items():
        out = out + (pw(0, a) * pw(1, b) * pw(2, c)) * coef
    return out


def vanishing_order(f: Poly, p: ProjPoint, variant: int = 0) -> int:
    """Largest k with f in I(p)^k, by coordinate change and truncation."""
    if f.is_zero():
        raise ValueError("vanishing order of the zero polynomial is undefined")
    if not f.is_homogeneous():
        raise ValueError("vanishing order needs a homogeneous polynomial")
    g = substitute(f, chart_matrix(p, variant))
    return min(a + b for (a, b, _c) in g._terms)


@lru_cache(maxsize=None)
def _chart_images(coords: tuple, d: int) -> tuple[Poly, ...]:
    A = chart_matrix(ProjPoint(*coords))
    return tuple(substitute(Poly.monomial(e), A) for e in monomials(d))


def order_conditions(p: ProjPoint, m: int, d: int) -> list[list[Fraction]]:
    """Linear functionals on R_d whose common kernel is ``I(p)^m`` in degree d.

    One row per monomial of the moved coordinates with (u, v)-degree < m;
    entry k is that monomial's coefficient in the image of monomial k.
    """
    if m <= 0:
        return []
    images = _chart_images(p.coords, d)
    targets = [e for e in monomials(d) if e[0] + e[1] < m]
    return [[img.coeff(t) for img in images] for t in targets]


# -- configuration-adapted bases ---------------------------------------------

def h_poly(F: Poly, n: int, i: int) -> Poly:
    """``H_i = x^e F^a`` where ``i = a n + e``, ``0 <= e < n``."""
    a, e = divmod(i, n)
    return X ** e * F ** a


class HBasisExpansion:
    """Coordinates of a polynomial in a configuration's ring basis.

    ``summands`` maps exponent tuples, ``(i, j, l)`` or ``(a, b, c, d)``,
    to nonzero coefficients.
    """

    def __init__(self, kind: str, summands: Mapping[tuple, Fraction]):
        self.kind = kind
        self.summands = {k: as_rational(v) for k, v in summands.items() if v}

    def __eq__(self, other):
        return isinstance(other, HBasisExpansion) and (self.kind, self.summands) == (other.kind, other.summands)

    def __repr__(self):
        return f"HBasisExpansion({self.kind}, {self.summands})"

    def items(self):
        return sorted(self.summands.items(), reverse=True)

    def reconstruct(self, cfg) -> Poly:
        out = Poly()
        for key, c in self.summands.items():
            out = out + basis_poly(cfg, key) * c
        return out


def basis_poly(cfg, key: tuple) -> Poly:
    """The ring-basis element named by an exponent tuple."""
    if cfg.kind == "ac":
        i, j, l = key
        return h_poly(cfg.F, cfg.n, i) * Poly.monomial((0, j, l))
    a, b, c, d = key
    if c >= cfg.n:
        raise ValueError(f"z-exponent {c} must be < n = {cfg.n}")
    return Poly.monomial((a, b, c)) * cfg.F ** d


def to_h_basis(f: Poly, cfg) -> HBasisExpansion:
    if not f.is_homogeneous():
        raise ValueError("expansion needs a homogeneous polynomial")
    if cfg.kind == "ac":
        return HBasisExpansion("ac", _ac_expand(f, cfg.F, cfg.n))
    return HBasisExpansion("nci", _nci_expand(f, cfg.F, cfg.n))


def _ac_expand(f: Poly, F: Poly, n: int) -> dict:
    # peel the top x-power of each z-slice: H_i y^j is monic in x with leading x^i
    out: dict[tuple, Fraction] = {}
    rest = dict(f.terms)
    while rest:
        (a, b, c) = max(rest, key=lambda e: (e[0], -e[2]))
        coef = rest[(a, b, c)]
        key = (a, b, c)
        out[key] = out.get(key, 0) + coef
        sub = h_poly(F, n, a) * Poly.monomial((0, b, c)) * coef
        for e, v in sub.items():
            s = rest.get(e, 0) - v
            if s:
                rest[e] = s
            else:
                rest.pop(e, None)
    return {k: v for k, v in out.items() if v}


def _nci_expand(f: Poly, F: Poly, n: int) -> dict:
    # z^n = L - F with L = F + z^n of z-degree < n; push F-factors upward
    L = F + Z ** n
    layers: dict[int, dict] = {0: dict(f.terms)}
    out: dict[tuple, Fraction] = {}
    d = 0
    while d in layers:
        g = layers[d]
        while True:
            high = [e for e in g if e[2] >= n]
            if not high:
                break
            a, b, c = max(high, key=lambda e: e[2])
            coef = g.pop((a, b, c))
            base = Poly.monomial((a, b, c - n), coef)
            for e, v in (base * L).items():
                s = g.get(e, 0) + v
                if s:
                    g[e] = s
                else:
                    g.pop(e, None)
            nxt = layers.setdefault(d + 1, {})
            e = (a, b, c - n)
            s = nxt.get(e, 0) - coef
            if s:
                nxt[e] = s
            else:
                nxt.pop(e, None)
        for (a, b, c), v in g.items():
            out[(a, b, c, d)] = v
        d += 1
    return out
