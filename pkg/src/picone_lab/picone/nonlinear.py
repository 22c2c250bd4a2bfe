"""The nonlinear identity, with u^p / f(v) in place of u^p / v^(p-1).

With F = f(v), F' = f'(v), F'' = f''(v) and s = |Δv|^(p-2) Δv:

    R   = |Δu|^p - Δ(u^p / F) s
    I   = |Δu|^p + u^p F' |Δv|^p / F^2 - p u^(p-1) |Δv|^(p-2) ΔuΔv / F
    II  = -(1/2) (s u^(p-2) / F) [ |2uF'/F ∇v - p∇u|^2 + c |∇u|^2 ]
    III = u^p F'' |∇v|^2 s / F^2

Expanding Δ(u^p / F) forces c = p(p-2) (the ``rederived`` form). The
``printed`` form keeps c = p(p-1); it differs from R by
-(p/2) s u^(p-2) |∇u|^2 / F, which :func:`printed_discrepancy` returns.
"""

from __future__ import annotations

from typing import Literal

import numpy as np

from picone_lab.fields.nonlinearity import NonlinearityProfile, nonlinearity_C1_gap
from picone_lab.jets.expr import FieldExpr, eval_jet
from picone_lab.jets.jet import Jet2, laplacian
from picone_lab.models.evaluation import PiconePointEval, PiconeVariant
from picone_lab.models.fields import ExponentPair
from picone_lab.picone.terms import (
    PiconeBatch,
    Points,
    abs_power,
    batch_points,
    hypothesis_mask,
    require_positive,
)

Form = Literal["printed", "rederived"]

_VARIANTS: dict[str, PiconeVariant] = {
    "printed": PiconeVariant.NONLINEAR_PRINTED,
    "rederived": PiconeVariant.NONLINEAR_REDERIVED,
}


def _lap(j: Jet2) -> np.ndarray:
    return np.asarray(laplacian(j))


def _dot(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return np.einsum("mi,mi->m", a, b)


def _r_nonlinear(
    u: FieldExpr, v: FieldExpr, f: NonlinearityProfile, pts: np.ndarray, p: float, ju: Jet2, jv: Jet2
) -> tuple[np.ndarray, np.ndarray]:
    """R and s = |Δv|^(p-2) Δv."""
    require_positive(np.asarray(jv.value), pts, "v")
    lap_v = _lap(jv)
    fv = f.of(v)
    require_positive(np.asarray(eval_jet(fv, pts).value), pts, f"f(v) [{f.label}]")
    lap_q = _lap(eval_jet(u**p / fv, pts))
    s = abs_power(lap_v, p - 2.0, pts) * lap_v
    return np.abs(_lap(ju)) ** p - lap_q * s, s


def eval_R_nonlinear(
    u: FieldExpr, v: FieldExpr, f: NonlinearityProfile, x: Points, p: float | ExponentPair
) -> float | np.ndarray:
    pe = ExponentPair.of(p).p
    pts = batch_points(u, v, x)
    r, _ = _r_nonlinear(u, v, f, pts, pe, eval_jet(u, pts), eval_jet(v, pts))
    return float(r[0]) if np.ndim(x) <= 1 else r


def nonlinear_batch(
    u: FieldExpr,
    v: FieldExpr,
    f: NonlinearityProfile,
    x: Points,
    p: float | ExponentPair,
    form: Form = "rederived",
) -> PiconeBatch:
    pe = ExponentPair.of(p).p
    pts = batch_points(u, v, x)
    ju, jv = eval_jet(u, pts), eval_jet(v, pts)
    uu, vv = np.asarray(ju.value), np.asarray(jv.value)
    R, s = _r_nonlinear(u, v, f, pts, pe, ju, jv)
    if pe < 2.0:
        require_positive(uu, pts, "u")

    lap_u, lap_v = _lap(ju), _lap(jv)
    F, F1, F2 = f.derivatives(vv)
    b_pm2 = abs_power(lap_v, pe - 2.0, pts)
    grad_u, grad_v = ju.gradient, jv.gradient

    term_I = (
        np.abs(lap_u) ** pe
        + uu**pe * F1 * np.abs(lap_v) ** pe / F**2
        - pe * uu ** (pe - 1.0) * b_pm2 * lap_u * lap_v / F
    )
    c = pe * (pe - 1.0) if form == "printed" else pe * (pe - 2.0)
    square = (2.0 * uu * F1 / F)[:, None] * grad_v - pe * grad_u
    term_II = -0.5 * (s * uu ** (pe - 2.0) / F) * (_dot(square, square) + c * _dot(grad_u, grad_u))
    term_III = uu**pe * F2 * _dot(grad_v, grad_v) * s / F**2

    admissible = hypothesis_mask(uu, vv, lap_v, pe) & (F > 0.0) & (F2 <= 0.0)
    if np.any(F > 0.0):
        gap = np.full_like(F, -np.inf)
        gap[F > 0.0] = nonlinearity_C1_gap(f, vv[F > 0.0], pe)
        admissible &= gap >= 0.0

    return PiconeBatch(
        variant=_VARIANTS[form],
        points=pts,
        L=term_I + term_II + term_III,
        R=R,
        term_I=term_I,
        term_II=term_II,
        term_III=term_III,
        admissible=admissible,
    )


def eval_L_nonlinear(
    u: FieldExpr,
    v: FieldExpr,
    f: NonlinearityProfile,
    x: Points,
    p: float | ExponentPair,
    form: Form = "rederived",
) -> PiconePointEval:
    return nonlinear_batch(u, v, f, x, p, form).point(0)


def printed_discrepancy(
    u: FieldExpr, v: FieldExpr, f: NonlinearityProfile, x: Points, p: float | ExponentPair
) -> np.ndarray:
    """The value printed-L minus R should take: -(p/2) s u^(p-2) |∇u|^2 / F."""
    pe = ExponentPair.of(p).p
    pts = batch_points(u, v, x)
    ju, jv = eval_jet(u, pts), eval_jet(v, pts)
    uu, vv = np.asarray(ju.value), np.asarray(jv.value)
    lap_v = _lap(jv)
    s = abs_power(lap_v, pe - 2.0, pts) * lap_v
    F = f.derivatives(vv)[0]
    return -0.5 * pe * s * uu ** (pe - 2.0) * _dot(ju.gradient, ju.gradient) / F


def npi1_gap(
    u: FieldExpr, v: FieldExpr, f: NonlinearityProfile, x: Points, p: float | ExponentPair
) -> float | np.ndarray:
    """|Δu| - u |Δv| / f(v)^(q/p); zero on the equality family of the identity."""
    pair = ExponentPair.of(p)
    pts = batch_points(u, v, x)
    ju, jv = eval_jet(u, pts), eval_jet(v, pts)
    uu, vv = np.asarray(ju.value), np.asarray(jv.value)
    F = f.derivatives(vv)[0]
    require_positive(F, pts, f"f(v) [{f.label}]")
    gap = np.abs(_lap(ju)) - uu * np.abs(_lap(jv)) / F ** (pair.q / pair.p)
    return float(gap[0]) if np.ndim(x) <= 1 else gap
