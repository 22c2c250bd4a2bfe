"""The power identity L(u, v) = R(u, v) for the p-biharmonic operator.

R = |Δu|^p - Δ(u^p / v^(p-1)) |Δv|^(p-2) Δv, where the quotient is built as an
expression and its Laplacian taken from exact jets. L is the sum of three terms,
each nonnegative when u >= 0, v > 0 and -Δv > 0:

    I   = |Δu|^p + (p-1)(u/v)^p |Δv|^p - p (u/v)^(p-1) |Δv|^(p-1) |Δu|
    II  = p (u/v)^(p-1) |Δv|^(p-2) (|Δu||Δv| - ΔuΔv)
    III = -p(p-1) u^(p-2) v^(1-p) Δv |Δv|^(p-2) |∇u - (u/v)∇v|^2
"""

from __future__ import annotations

import numpy as np

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


def _lap(j: Jet2) -> np.ndarray:
    return np.asarray(laplacian(j))


def _r_power(
    u: FieldExpr, v: FieldExpr, pts: np.ndarray, p: float, ju: Jet2, jv: Jet2
) -> np.ndarray:
    require_positive(np.asarray(jv.value), pts, "v")
    lap_u, lap_v = _lap(ju), _lap(jv)
    quotient = u**p / v ** (p - 1.0)
    lap_q = _lap(eval_jet(quotient, pts))
    s = abs_power(lap_v, p - 2.0, pts) * lap_v
    return np.abs(lap_u) ** p - lap_q * s


def eval_R_power(u: FieldExpr, v: FieldExpr, x: Points, p: float | ExponentPair) -> float | np.ndarray:
    """R at one point (a float) or at a batch of points (an array)."""
    pe = ExponentPair.of(p).p
    pts = batch_points(u, v, x)
    r = _r_power(u, v, pts, pe, eval_jet(u, pts), eval_jet(v, pts))
    return float(r[0]) if np.ndim(x) <= 1 else r


def power_batch(u: FieldExpr, v: FieldExpr, x: Points, p: float | ExponentPair) -> PiconeBatch:
    pe = ExponentPair.of(p).p
    pts = batch_points(u, v, x)
    ju, jv = eval_jet(u, pts), eval_jet(v, pts)
    uu, vv = np.asarray(ju.value), np.asarray(jv.value)
    R = _r_power(u, v, pts, pe, ju, jv)
    if pe < 2.0:
        require_positive(uu, pts, "u")

    lap_u, lap_v = _lap(ju), _lap(jv)
    a, b = np.abs(lap_u), np.abs(lap_v)
    ratio = uu / vv
    b_pm2 = abs_power(lap_v, pe - 2.0, pts)
    dev = ju.gradient - ratio[:, None] * jv.gradient
    dev2 = np.einsum("mi,mi->m", dev, dev)

    term_I = a**pe + (pe - 1.0) * ratio**pe * b**pe - pe * ratio ** (pe - 1.0) * b ** (pe - 1.0) * a
    term_II = pe * ratio ** (pe - 1.0) * b_pm2 * (a * b - lap_u * lap_v)
    term_III = -pe * (pe - 1.0) * uu ** (pe - 2.0) * vv ** (1.0 - pe) * lap_v * b_pm2 * dev2
    return PiconeBatch(
        variant=PiconeVariant.POWER,
        points=pts,
        L=term_I + term_II + term_III,
        R=R,
        term_I=term_I,
        term_II=term_II,
        term_III=term_III,
        admissible=hypothesis_mask(uu, vv, lap_v, pe),
    )


def eval_L_power(u: FieldExpr, v: FieldExpr, x: Points, p: float | ExponentPair) -> PiconePointEval:
    """L, its three terms and the residual against R at one point."""
    return power_batch(u, v, x, p).point(0)
