"""Closed-form answers: containment, resurgence, alpha invariants, factorizations."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import combinat
from .combinat import AcElem, NciElem
from .exactalg import format_rational

METHODS = ("closed_form", "lattice_witness", "oracle")


@dataclass(frozen=True)
class Verdict:
    contained: bool
    method: str
    threshold: Fraction
    witness: Optional[tuple]
    m: int
    r: int
    max_degree: Optional[int] = None

    def to_json(self, cfg=None) -> dict:
        return {
            "contained": self.contained,
            "method": self.method,
            "threshold": format_rational(self.threshold),
            "witness": None if self.witness is None else self.witness.to_json(cfg),
            "m": self.m,
            "r": self.r,
        }


@dataclass(frozen=True)
class SplitResult:
    relation: str  # "Equal" or "StrictSuperset"
    witness: Optional[NciElem] = None


def threshold(cfg, r: int) -> Fraction:
    """Largest value ``T`` with ``I^(m)`` not inside ``I^r`` exactly when ``m <= T``."""
    if cfg.kind == "ac":
        n = cfg.n
        return Fraction(n * n * r - n, n * n - n + 1)
    # 4r > 3m + 1  <=>  3m <= 4r - 2 for integers
    return Fraction(4 * r - 2, 3)


def closed_form_contained(cfg, m: int, r: int) -> bool:
    return m > threshold(cfg, r)


def ac_branch_not_contained(n: int, m: int, r: int) -> bool:
    """The case analysis form (m < r, or m >= r with m <= n / m >= n branches)."""
    if m < r:
        return True
    if m <= n and Fraction(m) <= Fraction(r * n * n + r * n - n - 2, n * n):
        return True
    return m >= n and Fraction(m) <= Fraction(n * n * r - n, n * n - n + 1)


def _in_symbolic(cfg, e, m):
    if cfg.kind == "ac":
        return combinat.ac_in_symbolic(cfg.n, e, m)
    return combinat.nci_in_symbolic(e, m)


def _in_power(cfg, e, r):
    if cfg.kind == "ac":
        return combinat.ac_in_power(cfg.n, e, r)
    return combinat.nci_in_power(e, r)


def low_degree_witness(cfg, m: int, r: int):
    """Smallest symbolic basis element, in the lowest degree that has one, outside ``I^r``.

    Only degrees below ``2r`` (where ``I^r`` is zero) are scanned.
    """
    for d in range(2 * r):
        elems = combinat.enumerate_basis(cfg, d, ("symbolic", m))
        if elems:
            bad = [e for e in elems if not _in_power(cfg, e, r)]
            return min(bad) if bad else None
    return None


def _lattice_witness(cfg, m: int, r: int):
    if m < r:
        return low_degree_witness(cfg, m, r)
    if cfg.kind == "ac":
        hit = combinat.ac_witness(cfg.n, m, r)
        return None if hit is None else AcElem(hit[0], 0, hit[1])
    return combinat.nci_lattice_search(m, r)


def contains(cfg, m: int, r: int, method: str = "closed_form",
             max_degree: Optional[int] = None) -> Verdict:
    """Decide ``I^(m) <= I^r``.

    ``closed_form`` uses the threshold inequality, ``lattice_witness`` searches
    for a basis element of ``I^(m)`` outside ``I^r``, and ``oracle`` compares
    graded pieces up to ``max_degree``.
    """
    if m < 1 or r < 1:
        raise ValueError("m and r must be positive")
    th = threshold(cfg, r)
    if method == "closed_form":
        if closed_form_contained(cfg, m, r):
            return Verdict(True, method, th, None, m, r)
        if m < r:
            w = low_degree_witness(cfg, m, r)
        elif cfg.kind == "ac":
            i, l = combinat.ac_witness(cfg.n, m, r)
            w = AcElem(i, 0, l)
        else:
            w = combinat.nci_witness(m, r)
        return Verdict(False, method, th, w, m, r)
    if method == "lattice_witness":
        w = _lattice_witness(cfg, m, r)
        return Verdict(w is None, method, th, w, m, r)
    if method == "oracle":
        return _oracle_verdict(cfg, m, r, th, max_degree)
    raise ValueError(f"unknown method {method!r}; expected one of {', '.join(METHODS)}")


def _oracle_verdict(cfg, m, r, th, max_degree):
    from .oracle import Power, default_max_degree, graded_ideal, graded_symbolic
    from .polyring import basis_poly

    D = default_max_degree(cfg, m, r) if max_degree is None else max_degree
    for d in range(D + 1):
        S = graded_symbolic(cfg, m, d)
        if S.rank == 0:
            continue
        P = graded_ideal(cfg, Power(r), d)
        if P.contains(S):
            continue
        for e in sorted(combinat.enumerate_basis(cfg, d, ("symbolic", m))):
            if not P.contains_poly(basis_poly(cfg, e)):
                return Verdict(False, "oracle", th, e, m, r, D)
        raise RuntimeError(f"oracle found I^({m}) not inside I^{r} in degree {d} "
                           "but no basis element escapes")
    return Verdict(True, "oracle", th, None, m, r, D)


def resurgence(cfg) -> Fraction:
    if cfg.kind == "ac":
        n = cfg.n
        return Fraction(n * n, n * n - n + 1)
    return Fraction(4, 3)


def resurgence_estimate(cfg, N: int, with_pair: bool = False):
    """Max of ``m/r`` over non-contained pairs with ``1 <= m, r <= N``."""
    if N < 2:
        raise ValueError("N must be at least 2")
    best = None
    for r in range(1, N + 1):
        for m in range(1, N + 1):
            if not closed_form_contained(cfg, m, r):
                q = Fraction(m, r)
                if best is None or q > best[0]:
                    best = (q, m, r)
    return best if with_pair else best[0]


def _parse_ideal(ideal):
    kind, k = ideal
    if kind not in ("symbolic", "power") or k < 1:
        raise ValueError(f"bad ideal {ideal!r}")
    return kind, k


def alpha(cfg, ideal) -> int:
    """Initial degree of ``I^(m)`` (``("symbolic", m)``) or ``I^r`` (``("power", r)``)."""
    kind, k = _parse_ideal(ideal)
    if kind == "power":
        return 2 * k
    if cfg.kind == "ac":
        n = cfg.n
        return -(-k * (2 * n - 1) // n)
    if cfg.n == 1:
        return -(-3 * k // 2)
    return 2 * k


def ac_power_split_exponent(cfg) -> int:
    """Least ``e`` with ``I^(et) = (I^(e))^t`` for all ``t``."""
    if cfg.kind != "ac":
        raise ValueError("split exponent is defined for almost collinear configurations")
    return cfg.n


def nci_split(cfg, alpha_: int, beta: int) -> SplitResult:
    """Compare ``I^(alpha+beta)`` with ``I^(alpha) I^(beta)``."""
    if cfg.kind != "nci":
        raise ValueError("split results are defined for nearly complete intersections")
    if alpha_ < 1 or beta < 1:
        raise ValueError("exponents must be positive")
    if alpha_ % 2 == 0 or beta % 2 == 0:
        return SplitResult("Equal")
    s = alpha_ + beta
    h = -(-s // 2)
    return SplitResult("StrictSuperset", NciElem(h, s // 2, 0, h))


def nci_normal_form(m: int) -> dict:
    """``I^(m)`` as ``(I^(2))^t``, times ``I`` when ``m`` is odd."""
    if m < 1:
        raise ValueError("m must be positive")
    if m % 2 == 0:
        return {"power_of_I2": m // 2, "extra_factor_I": False}
    return {"power_of_I2": (m - 1) // 2, "extra_factor_I": True}
