"""Pointwise values of the p-biharmonic operator Δ(|Δv|^(p-2) Δv) on closed-form fields.

At p = 2 this is Δ²v, taken exactly from jets of the expression Δv. Otherwise
the jet-exact field w = |Δv|^(p-2) Δv is differentiated by fourth-order central
differences with step min(1e-3, d/3), d the distance to the boundary.
"""

from __future__ import annotations

from typing import Literal

import numpy as np

from picone_lab.jets.expr import FieldExpr, eval_jet, laplacian_expr
from picone_lab.jets.jet import laplacian
from picone_lab.picone.terms import abs_power
from picone_lab.quadrature.domain import Domain

Method = Literal["jets", "finite-difference"]

# 4th-order second-derivative stencil on offsets -2..2
_OFFSETS = np.array([-2.0, -1.0, 0.0, 1.0, 2.0])
_WEIGHTS = np.array([-1.0, 16.0, -30.0, 16.0, -1.0]) / 12.0

# relative tolerances for residual checks, per method
TOLERANCE: dict[Method, float] = {"jets": 1e-9, "finite-difference": 1e-6}


def _flux(v: FieldExpr, points: np.ndarray, p: float) -> np.ndarray:
    lap = np.asarray(laplacian(eval_jet(v, points)))
    return abs_power(lap, p - 2.0, points) * lap


def p_biharmonic(
    v: FieldExpr, points: np.ndarray, p: float, domain: Domain
) -> tuple[np.ndarray, Method]:
    pts = np.asarray(points, dtype=float).reshape(-1, v.dimension)
    if p == 2.0:
        return np.asarray(laplacian(eval_jet(laplacian_expr(v), pts))), "jets"

    dist = np.minimum(pts - domain.lower, domain.upper - pts).min(axis=1)
    h = np.minimum(1e-3, dist / 3.0)
    total = np.zeros(len(pts))
    for axis in range(v.dimension):
        shifted = np.repeat(pts[:, None, :], len(_OFFSETS), axis=1)
        shifted[:, :, axis] += h[:, None] * _OFFSETS
        w = _flux(v, shifted.reshape(-1, v.dimension), p).reshape(len(pts), len(_OFFSETS))
        total += (w @ _WEIGHTS) / h**2
    return total, "finite-difference"


def operator_residual(
    v: FieldExpr, rhs: np.ndarray, points: np.ndarray, p: float, domain: Domain
) -> tuple[np.ndarray, np.ndarray, Method]:
    """``Δ_p²v - rhs`` at each point, with the per-point scale max(|Δ_p²v|, |rhs|, 1)."""
    lhs, method = p_biharmonic(v, points, p, domain)
    scale = np.maximum(np.maximum(np.abs(lhs), np.abs(rhs)), 1.0)
    return lhs - rhs, scale, method
