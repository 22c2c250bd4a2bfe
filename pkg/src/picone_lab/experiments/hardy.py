"""Hardy-type inequality ∫|Δu|^p >= λ∫g|u|^p from a positive supersolution v.

The hypothesis Δ(|Δv|^(p-2)Δv) >= λ g f(v), v > 0 is checked at the quadrature
nodes; the inequality is then evaluated for every corpus function. Corpus
functions must vanish on the boundary together with their normal derivative or
their Laplacian.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence

import numpy as np

from picone_lab.errors import AdmissibilityViolation
from picone_lab.experiments.supersolution import TOLERANCE, operator_residual
from picone_lab.fields.nonlinearity import NonlinearityProfile
from picone_lab.jets.expr import FieldExpr, eval_jet, evaluate
from picone_lab.jets.jet import laplacian
from picone_lab.models.fields import ExponentPair
from picone_lab.models.reports import HardyReport, HardyRow
from picone_lab.quadrature.domain import Domain
from picone_lab.quadrature.rules import QuadratureRule, integrate

logger = logging.getLogger(__name__)

BOUNDARY_TOL = 1e-12
MARGIN_TOL = 1e-9


def check_boundary_traces(u: FieldExpr, domain: Domain) -> None:
    """u = 0 and (∂u/∂n = 0 or Δu = 0) at sampled boundary points."""
    points, normals = domain.boundary_points()
    jet = eval_jet(u, points)
    value = np.abs(np.asarray(jet.value))
    normal = np.abs(np.einsum("mi,mi->m", jet.gradient, normals))
    lap = np.abs(np.asarray(laplacian(jet)))
    ok = (value <= BOUNDARY_TOL) & ((normal <= BOUNDARY_TOL) | (lap <= BOUNDARY_TOL))
    if not np.all(ok):
        raise AdmissibilityViolation(
            f"corpus function {u} does not vanish with its traces on the boundary", points[~ok]
        )


def hardy_row(
    u: FieldExpr, g: FieldExpr, lam: float, p: float, domain: Domain, rule: QuadratureRule
) -> HardyRow:
    check_boundary_traces(u, domain)
    lhs = integrate(lambda x: np.abs(np.asarray(laplacian(eval_jet(u, x)))) ** p, domain, rule)
    weighted = integrate(lambda x: evaluate(g, x) * np.abs(evaluate(u, x)) ** p, domain, rule)
    if not weighted > 0.0:
        raise AdmissibilityViolation(f"corpus function {u} is trivial: ∫g|u|^p = {weighted:g}")
    rhs = lam * weighted
    margin = lhs - rhs
    return HardyRow(
        u=str(u),
        lhs=lhs,
        rhs=rhs,
        margin=margin,
        ratio=lhs / weighted,
        passed=margin >= -MARGIN_TOL * max(lhs, 1.0),
    )


def run_hardy(
    v: FieldExpr,
    f: NonlinearityProfile,
    g: FieldExpr,
    lam: float,
    p: float | ExponentPair,
    corpus: Sequence[FieldExpr],
    domain: Domain,
    rule: QuadratureRule | None = None,
) -> HardyReport:
    rule = rule or QuadratureRule()
    pe = ExponentPair.of(p).p
    nodes, _ = rule.nodes_weights(domain)

    vv = evaluate(v, nodes)
    if not np.all(vv > 0.0):
        raise AdmissibilityViolation(f"supersolution v={v} must be > 0", nodes[~(vv > 0.0)])
    fv = f.derivatives(vv)[0]
    residual, scale, method = operator_residual(v, lam * evaluate(g, nodes) * fv, nodes, pe, domain)
    holds = bool(np.min(residual / scale) >= -TOLERANCE[method])
    if not holds:
        logger.warning("supersolution hypothesis fails for v=%s, λ=%g: no inequality is claimed", v, lam)

    rows = [hardy_row(u, g, lam, pe, domain, rule) for u in corpus]
    all_pass = all(r.passed for r in rows)
    logger.info("hardy: %d corpus functions, all_pass=%s, hypothesis=%s", len(rows), all_pass, holds)
    return HardyReport(
        lambda_=lam,
        p=pe,
        g=str(g),
        v=str(v),
        f=f.label,
        rows=rows,
        all_pass=all_pass,
        supersolution_residual_min=float(np.min(residual)),
        supersolution_holds=holds,
        supersolution_method=method,
        passed=all_pass or not holds,
    )
