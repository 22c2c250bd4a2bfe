"""The classical p = 2 identity for the biharmonic operator.

    L = (Δu - (u/v)Δv)^2 - (2Δv / v) |∇u - (u/v)∇v|^2
    R = |Δu|^2 - Δ(u^2 / v) Δv

The first square is term I, the gradient term is term II, term III is zero.
"""

from __future__ import annotations

import numpy as np

from picone_lab.jets.expr import FieldExpr, eval_jet
from picone_lab.jets.jet import laplacian
from picone_lab.models.evaluation import PiconePointEval, PiconeVariant
from picone_lab.picone.power import power_batch
from picone_lab.picone.terms import PiconeBatch, Points, batch_points, hypothesis_mask, require_positive


def dunninger_batch(u: FieldExpr, v: FieldExpr, x: Points) -> PiconeBatch:
    pts = batch_points(u, v, x)
    ju, jv = eval_jet(u, pts), eval_jet(v, pts)
    uu, vv = np.asarray(ju.value), np.asarray(jv.value)
    require_positive(vv, pts, "v")
    lap_u, lap_v = np.asarray(laplacian(ju)), np.asarray(laplacian(jv))
    ratio = uu / vv

    dev = ju.gradient - ratio[:, None] * jv.gradient
    term_I = (lap_u - ratio * lap_v) ** 2
    term_II = -(2.0 * lap_v / vv) * np.einsum("mi,mi->m", dev, dev)
    lap_q = np.asarray(laplacian(eval_jet(u**2 / v, pts)))
    return PiconeBatch(
        variant=PiconeVariant.DUNNINGER_P2,
        points=pts,
        L=term_I + term_II,
        R=lap_u**2 - lap_q * lap_v,
        term_I=term_I,
        term_II=term_II,
        term_III=np.zeros_like(term_I),
        admissible=hypothesis_mask(uu, vv, lap_v, 2.0),
    )


def eval_dunninger_p2(u: FieldExpr, v: FieldExpr, x: Points) -> PiconePointEval:
    return dunninger_batch(u, v, x).point(0)


def power_mismatch(u: FieldExpr, v: FieldExpr, x: Points) -> np.ndarray:
    """|L_dunninger - L_power(p=2)| / scale at each point; both are rearrangements of R."""
    d = dunninger_batch(u, v, x)
    pw = power_batch(u, v, d.points, 2.0)
    return np.abs(d.L - pw.L) / np.maximum(d.scale, pw.scale)
