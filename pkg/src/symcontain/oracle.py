"""Brute-force graded linear algebra, independent of the combinatorial bases.

Symbolic powers are computed degree by degree as the common kernel of the
order-of-vanishing conditions at every point; ordinary powers, products and
powers of ``M = (x, y, z)`` as spans of generator products padded by
monomials.  Containments and equalities of ideals are then checked one
graded piece at a time, up to a stated degree bound.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from . import combinat
from .exactalg import Echelon, ExactMatrix, intersect_rows, nullspace_rows
from .polyring import (X, Y, Z, Poly, ambient_dim, basis_poly, coeff_vector,
                       from_vector, monomial_index, monomials, order_conditions,
                       render)


# -- ideal expressions ---------------------------------------------------------

@dataclass(frozen=True)
class Symbolic:
    m: int


@dataclass(frozen=True)
class Power:
    r: int


@dataclass(frozen=True)
class MPower:
    """``M^t`` for the irrelevant ideal ``M = (x, y, z)``."""
    t: int


@dataclass(frozen=True)
class CIComponent:
    """``(x,y)^m``, ``(z,F)^m`` or ``(xy,F)^m``; ``which`` is ``"xy"``, ``"zF"`` or ``"xyF"``."""
    which: str
    m: int


@dataclass(frozen=True)
class Product:
    factors: tuple

    def __init__(self, factors: Iterable):
        object.__setattr__(self, "factors", tuple(factors))


@dataclass(frozen=True)
class Intersection:
    parts: tuple

    def __init__(self, parts: Iterable):
        object.__setattr__(self, "parts", tuple(parts))


IdealSpec = Symbolic | Power | MPower | CIComponent | Product | Intersection


def describe(spec) -> str:
    if isinstance(spec, Symbolic):
        return f"I^({spec.m})"
    if isinstance(spec, Power):
        return f"I^{spec.r}"
    if isinstance(spec, MPower):
        return f"M^{spec.t}"
    if isinstance(spec, CIComponent):
        return {"xy": "(x,y)", "zF": "(z,F)", "xyF": "(xy,F)"}[spec.which] + f"^{spec.m}"
    if isinstance(spec, Product):
        return "*".join(describe(f) for f in spec.factors) or "R"
    if isinstance(spec, Intersection):
        return " & ".join(describe(p) for p in spec.parts)
    raise TypeError(f"not an ideal spec: {spec!r}")


# -- graded pieces ------------------------------------------------------------------

class GradedSpace:
    """Degree-``d`` piece of an ideal as an exact row space over the monomials of R_d."""

    __slots__ = ("degree", "_ech")

    def __init__(self, degree: int, rows: Iterable[Sequence] = ()):
        self.degree = degree
        self._ech = Echelon(ambient_dim(degree))
        full = self._ech.cols
        for r in rows:
            self._ech.add(r)
            if self._ech.rank == full:
                break

    @classmethod
    def full(cls, d: int) -> "GradedSpace":
        n = ambient_dim(d)
        return cls(d, [[int(i == j) for j in range(n)] for i in range(n)])

    @property
    def ambient_dim(self) -> int:
        return self._ech.cols

    @property
    def rank(self) -> int:
        return self._ech.rank

    @property
    def rows(self) -> list[list[int]]:
        return self._ech.rows()

    @property
    def basis_rows(self) -> ExactMatrix:
        return ExactMatrix(self.rows, self.ambient_dim)

    def polys(self) -> list[Poly]:
        return [from_vector(r, self.degree) for r in self.rows]

    def contains_poly(self, f: Poly) -> bool:
        if f.is_zero():
            return True
        return self._ech.contains(coeff_vector(f, self.degree))

    def contains(self, other: "GradedSpace") -> bool:
        return graded_contains(self, other)

    def first_outside(self, other: "GradedSpace") -> Optional[Poly]:
        """A basis polynomial of ``other`` not in this space, if any."""
        for r in other.rows:
            if not self._ech.contains(r):
                return from_vector(r, self.degree)
        return None

    def __eq__(self, other):
        return (isinstance(other, GradedSpace) and self.degree == other.degree
                and self.rank == other.rank and self.contains(other))

    def __repr__(self):
        return f"GradedSpace(d={self.degree}, rank={self.rank}/{self.ambient_dim})"


def graded_contains(A: GradedSpace, B: GradedSpace) -> bool:
    """True iff ``B`` is a subspace of ``A``."""
    if A.degree != B.degree:
        raise ValueError(f"degree mismatch: {A.degree} vs {B.degree}")
    if B.rank > A.rank:
        return False
    return all(A._ech.contains(r) for r in B.rows)


@lru_cache(maxsize=None)
def graded_symbolic(cfg, m: int, d: int) -> GradedSpace:
    if d < 0:
        return GradedSpace(d)
    if m <= 0:
        return GradedSpace.full(d)
    conds = []
    for p in cfg.points:
        conds.extend(order_conditions(p, m, d))
    return GradedSpace(d, nullspace_rows(conds, ambient_dim(d)))


def _times_monomials(polys: Iterable[Poly], d: int) -> Iterable[list]:
    idx = monomial_index(d)
    size = len(idx)
    for g in polys:
        k = g.degree()
        if k > d:
            continue
        for mu in monomials(d - k):
            v = [0] * size
            for (a, b, c), coef in g.items():
                v[idx[(a + mu[0], b + mu[1], c + mu[2])]] = coef
            yield v


def _shift_rows(rows: Iterable[Sequence], d_from: int, g: Poly) -> Iterable[list]:
    """Rows of degree ``d_from`` multiplied by the polynomial ``g``."""
    src = monomials(d_from)
    d = d_from + g.degree()
    idx = monomial_index(d)
    size = len(idx)
    gterms = list(g.items())
    for r in rows:
        v = [0] * size
        for e, c in zip(src, r):
            if c:
                for (a, b, cc), gc in gterms:
                    k = idx[(e[0] + a, e[1] + b, e[2] + cc)]
                    v[k] += c * gc
        yield v


def _ci_generators(cfg, which: str, m: int) -> list[Poly]:
    if which == "xy":
        pair = (X, Y)
    elif which == "zF":
        pair = (Z, cfg.F)
    elif which == "xyF":
        pair = (X * Y, cfg.F)
    else:
        raise ValueError(f"unknown complete-intersection component {which!r}")
    return [pair[0] ** k * pair[1] ** (m - k) for k in range(m + 1)]


@lru_cache(maxsize=None)
def graded_ideal(cfg, spec, d: int) -> GradedSpace:
    if d < 0:
        return GradedSpace(d)
    if isinstance(spec, Symbolic):
        return graded_symbolic(cfg, spec.m, d)
    if isinstance(spec, MPower):
        return GradedSpace.full(d) if d >= spec.t else GradedSpace(d)
    if isinstance(spec, CIComponent):
        return GradedSpace(d, _times_monomials(_ci_generators(cfg, spec.which, spec.m), d))
    if isinstance(spec, Power):
        if spec.r <= 0:
            return GradedSpace.full(d)
        if spec.r == 1:
            return GradedSpace(d, _times_monomials(cfg.generators, d))
        return _product_piece(cfg, Power(spec.r - 1), Power(1), d)
    if isinstance(spec, Product):
        fs = spec.factors
        if not fs:
            return GradedSpace.full(d)
        if len(fs) == 1:
            return graded_ideal(cfg, fs[0], d)
        return _product_piece(cfg, Product(fs[:-1]), fs[-1], d)
    if isinstance(spec, Intersection):
        parts = spec.parts
        if not parts:
            return GradedSpace.full(d)
        rows = graded_ideal(cfg, parts[0], d).rows
        for p in parts[1:]:
            rows = intersect_rows(rows, graded_ideal(cfg, p, d).rows, ambient_dim(d))
        return GradedSpace(d, rows)
    raise TypeError(f"not an ideal spec: {spec!r}")


def _product_piece(cfg, left, right, d: int) -> GradedSpace:
    # (AB)_d is spanned by g * A_{d - deg g} over generators g of B
    if isinstance(right, MPower):
        return GradedSpace(d, _shift_all(graded_ideal(cfg, left, d - right.t), right.t))
    sp = GradedSpace(d)
    for g in ideal_generators(cfg, right, d):
        src = graded_ideal(cfg, left, d - g.degree())
        if src.rank == 0:
            continue
        for v in _shift_rows(src.rows, src.degree, g):
            sp._ech.add(v)
            if sp.rank == sp.ambient_dim:
                return sp
    return sp


def _shift_all(src: GradedSpace, t: int) -> Iterable[list]:
    for mu in monomials(t):
        yield from _shift_rows(src.rows, src.degree, Poly.monomial(mu))


@lru_cache(maxsize=None)
def _generators_in_degree(cfg, spec, e: int) -> tuple[Poly, ...]:
    """Basis of ``spec_e`` modulo ``(x, y, z) * spec_{e-1}``."""
    here = graded_ideal(cfg, spec, e)
    if here.rank == 0:
        return ()
    below = graded_ideal(cfg, spec, e - 1)
    ech = Echelon(ambient_dim(e))
    if below.rank:
        for var in (X, Y, Z):
            for v in _shift_rows(below.rows, e - 1, var):
                ech.add(v)
    out = []
    for r in here.rows:
        if ech.add(r):
            out.append(from_vector(r, e))
    return tuple(out)


def ideal_generators(cfg, spec, upto: int) -> list[Poly]:
    """Homogeneous generators of degree <= ``upto``."""
    if isinstance(spec, Power) and spec.r == 1:
        return [g for g in cfg.generators if g.degree() <= upto]
    if isinstance(spec, MPower):
        return [Poly.monomial(e) for e in monomials(spec.t)] if spec.t <= upto else []
    if isinstance(spec, CIComponent):
        return [g for g in _ci_generators(cfg, spec.which, spec.m) if g.degree() <= upto]
    out = []
    for e in range(upto + 1):
        out.extend(_generators_in_degree(cfg, spec, e))
    return out


def alpha_oracle(cfg, spec, limit: int = 60) -> int:
    """Least degree with a nonzero graded piece."""
    for d in range(limit + 1):
        if graded_ideal(cfg, spec, d).rank:
            return d
    raise ValueError(f"{describe(spec)} has no nonzero piece up to degree {limit}")


def clear_caches() -> None:
    for fn in (graded_symbolic, graded_ideal, _generators_in_degree):
        fn.cache_clear()


# -- claim verification ----------------------------------------------------------

CLAIMS = ("basis_sym", "basis_pow", "containment", "ac_sympow_split", "nci_split_even",
          "nci_split_odd", "nci_sym_I_product", "madic_1", "madic_2", "alpha")


@dataclass(frozen=True)
class Bounds:
    max_degree: Optional[int] = None
    m_max: int = 3
    r_max: int = 3
    t_max: int = 2
    pairs: Optional[tuple] = None

    def degree_for(self, cfg) -> int:
        if self.max_degree is not None:
            return self.max_degree
        return default_max_degree(cfg, self.m_max, self.r_max)


def default_max_degree(cfg, m_max: int, r_max: int) -> int:
    return (m_max + r_max) * (cfg.n + 1) + cfg.n


@dataclass
class Cell:
    params: dict
    d: int
    passed: bool
    detail: Optional[str] = None

    def to_json(self) -> dict:
        return {"params": self.params, "d": self.d, "pass": self.passed, "detail": self.detail}


@dataclass
class Report:
    claim: str
    cfg: object
    cells: list = field(default_factory=list)
    max_degree: int = 0

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self.cells)

    def failures(self) -> list:
        return [c for c in self.cells if not c.passed]

    def to_json(self) -> dict:
        return {"claim": self.claim, "cfg": self.cfg.to_json(),
                "cells": [c.to_json() for c in self.cells],
                "all_pass": self.all_pass, "max_degree": self.max_degree}


def _fail_detail(poly: Optional[Poly]) -> Optional[str]:
    return None if poly is None else f"offending row: {render(poly)}"


def _equal_cell(cfg, params, lhs, rhs, d) -> Cell:
    A = graded_ideal(cfg, lhs, d)
    B = graded_ideal(cfg, rhs, d)
    bad = A.first_outside(B) or B.first_outside(A)
    detail = None
    if bad is not None:
        detail = (f"{describe(lhs)} != {describe(rhs)} (ranks {A.rank}, {B.rank}); "
                  + _fail_detail(bad))
    return Cell(params, d, bad is None, detail)


def _contain_cell(cfg, params, big, small, d, note=None) -> Cell:
    A = graded_ideal(cfg, big, d)
    B = graded_ideal(cfg, small, d)
    bad = A.first_outside(B)
    detail = note if bad is None else f"{describe(small)} not inside {describe(big)}; " + _fail_detail(bad)
    return Cell(params, d, bad is None, detail)


def _basis_cell(cfg, params, ideal, spec, d, member=None) -> Cell:
    if member is None:
        elems = combinat.enumerate_basis(cfg, d, ideal)
    else:
        elems = [e for e in combinat.basis_tuples(cfg, d) if member(e)]
    space = graded_ideal(cfg, spec, d)
    for e in elems:
        f = basis_poly(cfg, e)
        if not space.contains_poly(f):
            return Cell(params, d, False, f"basis element {tuple(e)} not in {describe(spec)}; "
                        + _fail_detail(f))
    if len(elems) != space.rank:
        return Cell(params, d, False, f"combinatorial count {len(elems)} != oracle rank {space.rank}")
    return Cell(params, d, True)


def _cells_for(cfg, claim: str, bounds: Bounds, D: int) -> list[tuple]:
    """Enumerate (kind, params, d) work items; evaluated by ``_run_cell``."""
    items = []
    degrees = range(D + 1)
    if claim == "basis_sym":
        items = [("basis_sym", {"m": m}, d) for m in range(1, bounds.m_max + 1) for d in degrees]
    elif claim == "basis_pow":
        items = [("basis_pow", {"r": r}, d) for r in range(1, bounds.r_max + 1) for d in degrees]
    elif claim == "containment":
        for m in range(1, bounds.m_max + 1):
            for r in range(1, bounds.r_max + 1):
                items += [("containment", {"m": m, "r": r}, d) for d in degrees]
    elif claim == "ac_sympow_split":
        _require(cfg, "ac", claim)
        n = cfg.n
        for t in range(1, bounds.t_max + 1):
            items += [("ac_sympow_split", {"t": t, "e": n}, d) for d in degrees]
        for e in range(1, n):
            t = -(-n // e)
            d = -(-(e * t * (2 * n - 1)) // n)
            items.append(("ac_sympow_minimal", {"t": t, "e": e}, d))
    elif claim in ("nci_split_even", "nci_split_odd"):
        _require(cfg, "nci", claim)
        even = claim == "nci_split_even"
        pairs = bounds.pairs
        if pairs is None:
            pairs = [(a, b) for a in range(1, bounds.m_max + 1) for b in range(a, bounds.m_max + 1)
                     if a + b <= bounds.m_max]
        for a, b in pairs:
            if (a % 2 == 0 or b % 2 == 0) != even:
                continue
            items += [(claim, {"alpha": a, "beta": b}, d) for d in degrees]
            if not even:
                s = a + b
                h = -(-s // 2)
                wdeg = h + s // 2 + h * cfg.n
                items.append(("nci_split_odd_witness", {"alpha": a, "beta": b}, wdeg))
    elif claim == "nci_sym_I_product":
        _require(cfg, "nci", claim)
        for m in range(1, bounds.m_max + 1, 2):
            items += [("nci_sym_I_product", {"m": m}, d) for d in degrees]
    elif claim == "madic_1":
        for r in range(1, bounds.r_max + 1):
            for reading in ("symbolic", "ordinary", "symbolic_odd"):
                items += [("madic_1", {"r": r, "reading": reading}, d) for d in degrees]
    elif claim == "madic_2":
        for t in range(1, bounds.t_max + 1):
            for m in range(1, bounds.m_max + 1):
                for shift in (0, 1):
                    items += [("madic_2", {"t": t, "m": m, "shift": shift}, d) for d in degrees]
    elif claim == "alpha":
        from .decide import alpha
        for m in range(1, bounds.m_max + 1):
            items.append(("alpha", {"ideal": "symbolic", "m": m}, alpha(cfg, ("symbolic", m))))
        for r in range(1, bounds.r_max + 1):
            items.append(("alpha", {"ideal": "power", "r": r}, alpha(cfg, ("power", r))))
    else:
        raise ValueError(f"unknown claim {claim!r}; expected one of {', '.join(CLAIMS)}")
    return items


def _require(cfg, kind, claim):
    if cfg.kind != kind:
        raise ValueError(f"claim {claim} applies to {kind} configurations, not {cfg.kind}")


MADIC_NOTE = ("ordinary reading I^{2r}; the symbolic reading I^(2r) is checked "
              "separately and implies this one")


def _run_cell(cfg, kind: str, params: dict, d: int) -> Cell:
    if kind == "basis_sym":
        m = params["m"]
        return _basis_cell(cfg, params, ("symbolic", m), Symbolic(m), d)
    if kind == "basis_pow":
        r = params["r"]
        return _basis_cell(cfg, params, ("power", r), Power(r), d)
    if kind == "containment":
        from .decide import contains
        m, r = params["m"], params["r"]
        verdict = contains(cfg, m, r)
        S = graded_symbolic(cfg, m, d)
        P = graded_ideal(cfg, Power(r), d)
        bad = P.first_outside(S)
        if verdict.contained:
            return Cell(params, d, bad is None,
                        None if bad is None else "closed form says contained; " + _fail_detail(bad))
        w = basis_poly(cfg, verdict.witness)
        if w.degree() != d:
            return Cell(params, d, True, None)
        ok = S.contains_poly(w) and not P.contains_poly(w)
        return Cell(params, d, ok, f"witness {render(w)} " + ("escapes" if ok else "does not escape")
                    + f" I^{r}")
    if kind == "ac_sympow_split":
        t, e = params["t"], params["e"]
        return _equal_cell(cfg, params, Symbolic(e * t), Product([Symbolic(e)] * t), d)
    if kind == "ac_sympow_minimal":
        t, e = params["t"], params["e"]
        S = graded_symbolic(cfg, e * t, d)
        P = graded_ideal(cfg, Product([Symbolic(e)] * t), d)
        ok = S.rank > 0 and P.rank == 0
        return Cell(params, d, ok, f"I^({e * t}) has rank {S.rank}, (I^({e}))^{t} has rank {P.rank}")
    if kind == "nci_split_even":
        a, b = params["alpha"], params["beta"]
        return _equal_cell(cfg, params, Symbolic(a + b), Product([Symbolic(a), Symbolic(b)]), d)
    if kind == "nci_split_odd":
        a, b = params["alpha"], params["beta"]
        return _contain_cell(cfg, params, Symbolic(a + b), Product([Symbolic(a), Symbolic(b)]), d)
    if kind == "nci_split_odd_witness":
        a, b = params["alpha"], params["beta"]
        s = a + b
        w = basis_poly(cfg, combinat.NciElem(-(-s // 2), s // 2, 0, -(-s // 2)))
        S = graded_symbolic(cfg, s, d)
        P = graded_ideal(cfg, Product([Symbolic(a), Symbolic(b)]), d)
        ok = S.contains_poly(w) and not P.contains_poly(w)
        return Cell(params, d, ok, f"witness {render(w)}: rank I^({s}) = {S.rank}, "
                    f"rank I^({a})I^({b}) = {P.rank}")
    if kind == "nci_sym_I_product":
        m = params["m"]
        return _basis_cell(cfg, params, None, Product([Symbolic(m), Power(1)]), d,
                           member=lambda e: combinat.nci_sym_times_I(e, m))
    if kind == "madic_1":
        r, reading = params["r"], params["reading"]
        if reading == "symbolic":
            return _contain_cell(cfg, params, Product([Power(r), MPower(r)]), Symbolic(2 * r), d)
        if reading == "ordinary":
            return _contain_cell(cfg, params, Product([Power(r), MPower(r)]), Power(2 * r), d,
                                 note=MADIC_NOTE)
        return _contain_cell(cfg, params, Product([Power(r), MPower(r - 1)]), Symbolic(2 * r - 1), d)
    if kind == "madic_2":
        t, m, shift = params["t"], params["m"], params["shift"]
        big = Product([Product([Symbolic(m)] * t), MPower(t - shift)])
        return _contain_cell(cfg, params, big, Symbolic(t * (m + 1) - shift), d)
    if kind == "alpha":
        spec = Symbolic(params["m"]) if params["ideal"] == "symbolic" else Power(params["r"])
        got = alpha_oracle(cfg, spec, limit=d + 1)
        return Cell(params, d, got == d, None if got == d else f"oracle alpha {got}, formula {d}")
    raise ValueError(f"unknown cell kind {kind!r}")


def _run_item(args):
    cfg, kind, params, d = args
    return _run_cell(cfg, kind, params, d)


def verify_claim(cfg, claim: str, bounds: Bounds | None = None, jobs: int = 1) -> Report:
    """Check one catalogue claim at every cell within ``bounds``."""
    if claim not in CLAIMS:
        raise ValueError(f"unknown claim {claim!r}; expected one of {', '.join(CLAIMS)}")
    bounds = bounds or Bounds()
    D = bounds.degree_for(cfg)
    items = _cells_for(cfg, claim, bounds, D)
    work = [(cfg, kind, params, d) for kind, params, d in items]
    if jobs and jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            cells = list(pool.map(_run_item, work, chunksize=max(1, len(work) // (4 * jobs))))
    else:
        cells = [_run_item(w) for w in work]
    return Report(claim, cfg, cells, D)
