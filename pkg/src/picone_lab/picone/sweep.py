"""Identity sweeps: evaluate over many points and keep the normalized extremes.

Every quantity is divided by scale = max(|L|, |R|, 1) at its own point. Points
where u, v break the pair hypotheses are rejected up front; the nonlinearity's
own conditions only decide ``admissible_count``, since L = R holds regardless.
"""

from __future__ import annotations

import logging

import numpy as np

from picone_lab.fields.nonlinearity import NonlinearityProfile
from picone_lab.jets.expr import FieldExpr, eval_jet
from picone_lab.jets.jet import laplacian
from picone_lab.models.evaluation import PiconeSweep
from picone_lab.models.fields import ExponentPair
from picone_lab.picone.dunninger import dunninger_batch, power_mismatch
from picone_lab.picone.nonlinear import Form, nonlinear_batch, printed_discrepancy
from picone_lab.picone.power import power_batch
from picone_lab.picone.terms import (
    PiconeBatch,
    Points,
    batch_points,
    hypothesis_mask,
    reject_inadmissible,
)

logger = logging.getLogger(__name__)


def check_pair(u: FieldExpr, v: FieldExpr, x: Points, p: float) -> np.ndarray:
    """Raise AdmissibilityViolation unless u, v satisfy the hypotheses at every point."""
    pts = batch_points(u, v, x)
    ju, jv = eval_jet(u, pts), eval_jet(v, pts)
    mask = hypothesis_mask(
        np.asarray(ju.value), np.asarray(jv.value), np.asarray(laplacian(jv)), p
    )
    reject_inadmissible(mask, pts, f"pair u={u}, v={v}")
    return pts


def _summary(batch: PiconeBatch, u: FieldExpr, v: FieldExpr, p: float, **extra: object) -> PiconeSweep:
    scale = batch.scale
    sweep = PiconeSweep(
        variant=batch.variant,
        u=str(u),
        v=str(v),
        p=p,
        point_count=len(batch),
        admissible_count=int(np.count_nonzero(batch.admissible)),
        max_residual=float(np.max(np.abs(batch.residual) / scale)),
        min_L=float(np.min(batch.L / scale)),
        min_term_I=float(np.min(batch.term_I / scale)),
        min_term_II=float(np.min(batch.term_II / scale)),
        min_term_III=float(np.min(batch.term_III / scale)),
        **extra,
    )
    logger.debug(
        "%s u=%s v=%s p=%g: max residual %.3e, min L %.3e",
        sweep.variant, sweep.u, sweep.v, p, sweep.max_residual, sweep.min_L,
    )
    return sweep


def sweep_power(u: FieldExpr, v: FieldExpr, p: float | ExponentPair, x: Points) -> PiconeSweep:
    pe = ExponentPair.of(p).p
    pts = check_pair(u, v, x, pe)
    return _summary(power_batch(u, v, pts, pe), u, v, pe)


def sweep_nonlinear(
    u: FieldExpr,
    v: FieldExpr,
    f: NonlinearityProfile,
    p: float | ExponentPair,
    x: Points,
    form: Form = "rederived",
) -> PiconeSweep:
    """Sweep one form, always reporting the printed form's discrepancy diagnostic.

    ``max_discrepancy_mismatch`` compares printed-L minus R with the closed-form
    discrepancy, normalized by max(|predicted|, scale).
    """
    pe = ExponentPair.of(p).p
    pts = check_pair(u, v, x, pe)
    batch = nonlinear_batch(u, v, f, pts, pe, form)
    printed = batch if form == "printed" else nonlinear_batch(u, v, f, pts, pe, "printed")
    observed = printed.residual
    predicted = printed_discrepancy(u, v, f, pts, pe)
    mismatch = np.abs(observed - predicted) / np.maximum(np.abs(predicted), printed.scale)
    sweep = _summary(
        batch,
        u,
        v,
        pe,
        max_printed_discrepancy=float(np.max(np.abs(observed) / printed.scale)),
        max_discrepancy_mismatch=float(np.max(mismatch)),
    )
    return sweep.model_copy(update={"f": f.label})


def sweep_dunninger(u: FieldExpr, v: FieldExpr, x: Points) -> PiconeSweep:
    pts = check_pair(u, v, x, 2.0)
    return _summary(
        dunninger_batch(u, v, pts),
        u,
        v,
        2.0,
        max_power_mismatch=float(np.max(power_mismatch(u, v, pts))),
    )
