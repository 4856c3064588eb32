"""The two point configurations on a pair of lines.

Almost collinear (``ac``): ``n`` points on the line ``z = 0`` (``[0:1:0]`` and
``[l_i:1:0]``) plus ``p_0 = [0:0:1]`` off it.  ``F = x prod(x - l_i y)`` and
``I = (xz, yz, F)``.

Nearly complete intersection (``nci``): ``p_0 = [0:0:1]`` where the lines
``x = 0`` and ``y = 0`` meet, ``n`` points ``[0:1:alpha_i]`` on ``x = 0`` and
``n`` points ``[1:0:beta_i]`` on ``y = 0``.
``F = z^n - prod(z - beta_i x) - prod(z - alpha_i y)`` and ``I = (xy, xF, yF)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exactalg import as_rational, format_rational
from .polyring import X, Y, Z, Poly, ProjPoint


class ConfigError(ValueError):
    pass


class InvalidParams(ConfigError):
    """Parameters give coincident or degenerate points."""


class UnsupportedSize(ConfigError):
    """``n`` is outside the range the containment results cover."""


@dataclass(frozen=True)
class Config:
    kind: str
    n: int
    slopes: tuple[Fraction, ...] = ()
    alphas: tuple[Fraction, ...] = ()
    betas: tuple[Fraction, ...] = ()
    F: Poly = field(compare=False, repr=False, default=None)
    generators: tuple[Poly, ...] = field(compare=False, repr=False, default=())
    points: tuple[ProjPoint, ...] = field(compare=False, repr=False, default=())

    @property
    def label(self) -> str:
        return f"{self.kind.upper()} n={self.n}"

    @property
    def generator_degrees(self) -> tuple[int, ...]:
        return tuple(g.degree() for g in self.generators)

    def to_json(self) -> dict:
        doc = {"kind": self.kind, "n": self.n}
        if self.kind == "ac":
            doc["slopes"] = [format_rational(s) for s in self.slopes]
        else:
            doc["alphas"] = [format_rational(a) for a in self.alphas]
            doc["betas"] = [format_rational(b) for b in self.betas]
        return doc

    def __reduce__(self):
        # rebuild through the constructors so derived polynomials stay consistent
        if self.kind == "ac":
            return make_ac, (self.n, self.slopes)
        return make_nci, (self.n, self.alphas, self.betas)


def _check_params(values: Sequence, count: int, what: str) -> tuple[Fraction, ...]:
    vals = tuple(as_rational(v) for v in values)
    if len(vals) != count:
        raise InvalidParams(f"expected {count} {what}, got {len(vals)}")
    if any(v == 0 for v in vals):
        raise InvalidParams(f"{what} must be nonzero")
    if len(set(vals)) != len(vals):
        raise InvalidParams(f"{what} must be distinct")
    return vals


def make_ac(n: int, slopes: Sequence) -> Config:
    if n < 3:
        raise UnsupportedSize(f"almost collinear configurations need n >= 3, got {n}")
    slopes = tuple(sorted(_check_params(slopes, n - 1, "slopes")))
    F = X
    for s in slopes:
        F = F * (X - Y * s)
    points = [ProjPoint(0, 0, 1), ProjPoint(0, 1, 0)] + [ProjPoint(s, 1, 0) for s in slopes]
    gens = (X * Z, Y * Z, F)
    return Config("ac", n, slopes=slopes, F=F, generators=gens,
                  points=tuple(points))


def make_nci(n: int, alphas: Sequence, betas: Sequence) -> Config:
    if n < 1:
        raise UnsupportedSize(f"nearly complete intersections need n >= 1, got {n}")
    alphas = tuple(sorted(_check_params(alphas, n, "alphas")))
    betas = tuple(sorted(_check_params(betas, n, "betas")))
    pa = Poly.constant(1)
    pb = Poly.constant(1)
    for a in alphas:
        pa = pa * (Z - Y * a)
    for b in betas:
        pb = pb * (Z - X * b)
    F = Z ** n - pb - pa
    points = ([ProjPoint(0, 0, 1)]
              + [ProjPoint(0, 1, a) for a in alphas]
              + [ProjPoint(1, 0, b) for b in betas])
    gens = (X * Y, X * F, Y * F)
    return Config("nci", n, alphas=alphas, betas=betas,
                  F=F, generators=gens, points=tuple(points))


def default_config(kind: str, n: int) -> Config:
    """Configuration with parameters 1, 2, ..., used by tests and notebooks."""
    if kind == "ac":
        return make_ac(n, range(1, n))
    if kind == "nci":
        return make_nci(n, range(1, n + 1), range(1, n + 1))
    raise ConfigError(f"unknown configuration kind {kind!r}")


def config_from_json(doc: dict) -> Config:
    if not isinstance(doc, dict):
        raise ConfigError("configuration document must be a JSON object")
    kind = doc.get("kind")
    n = doc.get("n")
    if not isinstance(n, int) or isinstance(n, bool):
        raise ConfigError("'n' must be an integer")
    try:
        if kind == "ac":
            return make_ac(n, doc.get("slopes", []))
        if kind == "nci":
            return make_nci(n, doc.get("alphas", []), doc.get("betas", []))
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        if isinstance(exc, ConfigError):
            raise
        raise InvalidParams(str(exc)) from exc
    raise ConfigError(f"'kind' must be 'ac' or 'nci', got {kind!r}")


def load_config(path) -> Config:
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"{path}: {exc}") from exc
    return config_from_json(doc)
