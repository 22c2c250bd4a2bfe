"""Proportionality for the singular system

    Δ_p²u = f(v),   Δ_p²v = f(v)² / u^(p-1),   u, v > 0,   Navier data.

The pair is built as u = c1·v and both equations are checked residually at the
quadrature nodes; ∫R(u, v) must vanish and c1 is recovered by least squares.
"""

from __future__ import annotations

import logging

import numpy as np

from picone_lab.errors import ResidualTooLarge
from picone_lab.experiments.supersolution import TOLERANCE, p_biharmonic
from picone_lab.fields.nonlinearity import NonlinearityProfile
from picone_lab.jets.expr import FieldExpr, evaluate
from picone_lab.models.evaluation import PiconeVariant
from picone_lab.models.fields import ExponentPair
from picone_lab.models.reports import ProportionalityReport
from picone_lab.quadrature.domain import Domain
from picone_lab.quadrature.picone_integral import integrate_picone
from picone_lab.quadrature.rules import QuadratureRule

logger = logging.getLogger(__name__)

RESIDUAL_TOL = 1e-8
DEVIATION_TOL = 1e-10
INTEGRAL_TOL = 1e-10


def _relative_residual(lhs: np.ndarray, rhs: np.ndarray) -> float:
    return float(np.max(np.abs(lhs - rhs)) / max(float(np.max(np.abs(rhs))), 1e-300))


def run_singular_system(
    v: FieldExpr,
    c1: float,
    f: NonlinearityProfile,
    p: float | ExponentPair,
    domain: Domain,
    rule: QuadratureRule | None = None,
) -> ProportionalityReport:
    rule = rule or QuadratureRule()
    pe = ExponentPair.of(p).p
    nodes, _ = rule.nodes_weights(domain)
    u = (c1 * v).named(f"{c1:.17g} * {v}")

    uu, vv = evaluate(u, nodes), evaluate(v, nodes)
    fv = f.derivatives(vv)[0]
    lap2_u, method = p_biharmonic(u, nodes, pe, domain)
    lap2_v, _ = p_biharmonic(v, nodes, pe, domain)
    first = _relative_residual(lap2_u, fv)
    second = _relative_residual(lap2_v, fv**2 / uu ** (pe - 1.0))
    tol = RESIDUAL_TOL if method == "jets" else TOLERANCE[method]
    if max(first, second) > tol:
        raise ResidualTooLarge(
            f"(v={v}, c1={c1:g}, f={f.label}, p={pe:g}) does not solve the system: "
            f"residuals {first:.3e}, {second:.3e}"
        )

    c1_rec = float(uu @ vv) / float(vv @ vv)
    deviation = float(np.max(np.abs(uu - c1_rec * vv)) / np.max(np.abs(uu)))
    integral = integrate_picone(u, v, pe, domain, rule, PiconeVariant.NONLINEAR_REDERIVED, f)
    scale = max(abs(integral.int_L), 1.0)
    logger.info("singular system: c1=%.15g recovered, ∫R=%.3e", c1_rec, integral.int_R)
    return ProportionalityReport(
        v=str(v),
        f=f.label,
        p=pe,
        c1=c1,
        c1_recovered=c1_rec,
        relative_deviation=deviation,
        residual_first=first,
        residual_second=second,
        int_R=integral.int_R,
        passed=deviation <= DEVIATION_TOL and abs(integral.int_R) <= INTEGRAL_TOL * scale,
    )
