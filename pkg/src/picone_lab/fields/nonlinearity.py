"""Nonlinearities f for the nonlinear identity, with their admissibility conditions.

A profile wraps a 1-D field in the variable ``y`` (coordinate ``x0``). Its first
and second derivatives come from jets, so nothing is differentiated by hand.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass
from typing import Literal

import numpy as np

from picone_lab.errors import DimensionMismatch, DomainError, SingularEvaluation
from picone_lab.jets.expr import FieldExpr, coordinate, eval_jet, exp, log
from picone_lab.jets.parse import parse_field
from picone_lab.models.fields import ExponentPair

C1Variant = Literal["proof", "statement"]


@dataclass(frozen=True)
class NonlinearityProfile:
    f: FieldExpr
    label: str

    def __post_init__(self) -> None:
        if self.f.dimension != 1:
            raise DimensionMismatch("a nonlinearity is a function of one variable y")

    def __str__(self) -> str:
        return self.label

    def derivatives(self, y: float | np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """``(f(y), f'(y), f''(y))`` for a scalar or an array of arguments."""
        ys = np.asarray(y, dtype=float)
        jet = eval_jet(self.f, ys.reshape(-1, 1))
        shape = ys.shape
        return (
            np.asarray(jet.value).reshape(shape),
            jet.gradient[:, 0].reshape(shape),
            jet.hessian[:, 0, 0].reshape(shape),
        )

    def of(self, v: FieldExpr) -> FieldExpr:
        """The composed field ``f(v(x))``."""
        return self.f.compose(v)


def _y() -> FieldExpr:
    return coordinate(0)


PROFILES: dict[str, Callable[[float], FieldExpr]] = {
    "linear": lambda p: _y(),
    "power": lambda p: _y() ** (p - 1.0),
    "sqrt": lambda p: _y() ** 0.5,
    "softplus": lambda p: log(1.0 + exp(_y())),
    "double": lambda p: 2.0 * _y(),
    "quadratic_over_linear": lambda p: _y() ** 2 / (1.0 + _y()),
}


def resolve_profile(spec: str, p: float | ExponentPair = 2.0) -> NonlinearityProfile:
    """A named profile (``power`` depends on p) or an s-expression in ``y``."""
    text = spec.strip()
    if text in PROFILES:
        pe = ExponentPair.of(p).p
        label = f"power {pe:g}" if text == "power" else text
        return NonlinearityProfile(PROFILES[text](pe), label)
    return NonlinearityProfile(parse_field(text, 1), text)


def _scalar_or_array(x: np.ndarray) -> float | np.ndarray:
    return float(x) if x.ndim == 0 else x


def nonlinearity_C1_gap(
    profile: NonlinearityProfile,
    y: float | np.ndarray,
    p: float | ExponentPair,
    variant: C1Variant = "proof",
) -> float | np.ndarray:
    """``f'(y) - (p-1) f(y)^e``; nonnegative where f is admissible.

    ``e = (p-2)/(p-1)`` is the exponent the identity's proof needs. The
    ``"statement"`` variant uses the reciprocal ``(p-1)/(p-2)``, undefined at p = 2.
    """
    pe = ExponentPair.of(p).p
    f0, f1, _ = profile.derivatives(y)
    if np.any(f0 <= 0.0):
        raise DomainError(f"f(y) must be > 0, got min {float(np.min(f0)):.6g}", profile.label)
    if variant == "proof":
        exponent = (pe - 2.0) / (pe - 1.0)
    else:
        if pe == 2.0:
            raise SingularEvaluation("exponent (p-1)/(p-2) is undefined at p = 2")
        exponent = (pe - 1.0) / (pe - 2.0)
    return _scalar_or_array(f1 - (pe - 1.0) * f0**exponent)


def nonlinearity_C2_check(profile: NonlinearityProfile, y: float | np.ndarray) -> float | np.ndarray:
    """``f''(y)``; admissible where it is <= 0."""
    return _scalar_or_array(profile.derivatives(y)[2])
