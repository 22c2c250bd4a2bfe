"""Named test fields, addressable from configs as short descriptors.

A descriptor is either a catalog entry (``"sine_mode 1"``, ``"bubble"``,
``"poly 0 0 1"``, ``"gauss_bump 0.25"``, ``"product2d sine_mode 1 | bubble"``)
or a raw s-expression (``"(* x0 (- 1 x0))"``).

Entries are built for a given domain. On a rectangle the 1-D entries become
tensor products of the same entry along both axes; ``product2d`` combines two
different entries.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from typing import Literal

from picone_lab.errors import ConfigError, UnknownCatalogEntry
from picone_lab.jets.expr import FieldExpr, constant, coordinate, exp, sin
from picone_lab.jets.parse import parse_field
from picone_lab.quadrature.domain import Domain

Builder1D = Callable[[Sequence[float], float, float], FieldExpr]


def _sine_mode(params: Sequence[float], a: float, b: float) -> FieldExpr:
    (k,) = params or (1.0,)
    x = coordinate(0)
    return sin((k * math.pi / (b - a)) * (x - a))


def _bubble(params: Sequence[float], a: float, b: float) -> FieldExpr:
    t = (coordinate(0) - a) / (b - a)
    return t**2 * (1.0 - t) ** 2


def _gauss_bump(params: Sequence[float], a: float, b: float) -> FieldExpr:
    (width,) = params or (0.25,)
    z = (coordinate(0) - (a + b) / 2) / (width * (b - a))
    return exp(-(z**2))


def _poly(params: Sequence[float], a: float, b: float) -> FieldExpr:
    if not params:
        raise ConfigError("poly", "needs at least one coefficient")
    x = coordinate(0)
    result = constant(params[0])
    for k, c in enumerate(params[1:], start=1):
        if c != 0.0:
            result = result + c * x**k
    return result


@dataclass(frozen=True)
class CatalogEntry:
    build: Builder1D
    # boundary traces that vanish on every edge of the domain
    boundary: Literal["navier", "clamped"] | None
    arity: tuple[int, int]  # min/max number of numeric parameters


CATALOG: dict[str, CatalogEntry] = {
    "sine_mode": CatalogEntry(_sine_mode, "navier", (0, 1)),
    "bubble": CatalogEntry(_bubble, "clamped", (0, 0)),
    "gauss_bump": CatalogEntry(_gauss_bump, None, (0, 1)),
    "poly": CatalogEntry(_poly, None, (1, 32)),
}


def _entry(name: str) -> CatalogEntry:
    if name not in CATALOG:
        raise UnknownCatalogEntry(name)
    return CATALOG[name]


def _build_1d(name: str, params: Sequence[float], a: float, b: float) -> FieldExpr:
    entry = _entry(name)
    lo, hi = entry.arity
    if not lo <= len(params) <= hi:
        raise ConfigError(name, f"takes {lo}..{hi} parameters, got {len(params)}")
    return entry.build(params, a, b)


def catalog(name: str, params: Sequence[float] = (), domain: Domain | None = None) -> FieldExpr:
    """Build a catalog entry on ``domain`` (default: the unit interval)."""
    domain = domain or Domain.interval(0.0, 1.0)
    label = " ".join([name, *(f"{p:g}" for p in params)])
    if domain.dimension == 1:
        return _build_1d(name, params, *domain.bounds).named(label)
    a1, b1, a2, b2 = domain.bounds
    fx = _build_1d(name, params, a1, b1).on_axis(0, 2)
    fy = _build_1d(name, params, a2, b2).on_axis(1, 2)
    return (fx * fy).named(label)


def product2d(first: str, second: str, domain: Domain) -> FieldExpr:
    """``f(x0) * g(x1)`` for two 1-D descriptors on a rectangle."""
    if domain.dimension != 2:
        raise ConfigError("product2d", "needs a rectangle domain")
    if not first or not second:
        raise ConfigError("product2d", f"expects 'product2d A | B', got '{first} | {second}'")
    a1, b1, a2, b2 = domain.bounds
    f = _resolve_entry(first, Domain.interval(a1, b1)).on_axis(0, 2)
    g = _resolve_entry(second, Domain.interval(a2, b2)).on_axis(1, 2)
    return (f * g).named(f"product2d {first} | {second}")


def _split(descriptor: str) -> tuple[str, list[float]]:
    tokens = descriptor.split()
    if not tokens:
        raise ConfigError("field", "empty field descriptor")
    name, *rest = tokens
    try:
        return name, [float(t) for t in rest]
    except ValueError as e:
        raise ConfigError(name, f"non-numeric parameter in '{descriptor}'") from e


def _resolve_entry(descriptor: str, domain: Domain) -> FieldExpr:
    name, params = _split(descriptor)
    return catalog(name, params, domain)


def resolve_field(descriptor: str, domain: Domain) -> FieldExpr:
    """Turn a config descriptor into a FieldExpr of the domain's dimension."""
    text = descriptor.strip()
    if not text:
        raise ConfigError("field", "empty field descriptor")
    if text.startswith("("):
        return parse_field(text, domain.dimension).named(text)
    if text.startswith("product2d"):
        first, _, second = text.removeprefix("product2d").partition("|")
        return product2d(first.strip(), second.strip(), domain)
    return _resolve_entry(text, domain)


def boundary_kind(descriptor: str) -> Literal["navier", "clamped"] | None:
    """Which boundary traces vanish for a catalog descriptor (None for raw expressions)."""
    text = descriptor.strip()
    if text.startswith("(") or text.startswith("product2d"):
        return None
    return _entry(_split(text)[0]).boundary
