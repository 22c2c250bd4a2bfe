"""Sturmian comparison, in contradiction form.

If u > 0 solves Δ_p²u = f1 |u|^(p-2) u and f1 < f2, a positive solution v of
Δ_p²v = f2 f(v) would give 0 <= ∫R(u, v) = ∫(f1 - f2) u^p < 0. The run checks
both ingredients: the integral is negative, and R(u, v) >= 0 pointwise for a
set of admissible positive candidates v.
"""

from __future__ import annotations

import logging
import operator
from collections.abc import Sequence
from functools import reduce
from typing import Literal

import numpy as np

from picone_lab.errors import HypothesisViolation
from picone_lab.experiments.supersolution import TOLERANCE, operator_residual
from picone_lab.fields.catalog import catalog
from picone_lab.fields.nonlinearity import NonlinearityProfile
from picone_lab.jets.expr import FieldExpr, coordinate, evaluate
from picone_lab.models.fields import ExponentPair
from picone_lab.models.reports import SturmReport
from picone_lab.picone import check_pair, eval_R_nonlinear
from picone_lab.quadrature.domain import Domain
from picone_lab.quadrature.rules import QuadratureRule, integrate

logger = logging.getLogger(__name__)

R_TOL = 1e-10


def default_candidates(domain: Domain) -> list[FieldExpr]:
    """First sine mode and the product of boundary-vanishing parabolas."""
    n = domain.dimension
    factors = [
        (coordinate(axis, n) - float(lo)) * (float(hi) - coordinate(axis, n))
        for axis, (lo, hi) in enumerate(zip(domain.lower, domain.upper, strict=True))
    ]
    parabola = reduce(operator.mul, factors)
    return [catalog("sine_mode", [1.0], domain), parabola.named("parabola")]


def sturm_conclusion(integral: float, r_min: float) -> Literal["no_positive_v_possible", "inconclusive"]:
    """The contradiction needs both a negative integral and R(u, v) >= 0 actually observed."""
    if integral < 0.0 and r_min >= -R_TOL:
        return "no_positive_v_possible"
    return "inconclusive"


def run_sturm(
    u: FieldExpr,
    f1: FieldExpr,
    f2: FieldExpr,
    p: float | ExponentPair,
    f: NonlinearityProfile,
    domain: Domain,
    rule: QuadratureRule | None = None,
    candidates: Sequence[FieldExpr] | None = None,
) -> SturmReport:
    rule = rule or QuadratureRule()
    pe = ExponentPair.of(p).p
    nodes, _ = rule.nodes_weights(domain)

    uu = evaluate(u, nodes)
    if not np.all(uu > 0.0):
        raise HypothesisViolation(f"u={u} must be > 0 in the interior")
    if not np.all(evaluate(f1, nodes) < evaluate(f2, nodes)):
        raise HypothesisViolation(f"f1={f1} must be < f2={f2} everywhere")

    rhs = evaluate(f1, nodes) * np.abs(uu) ** (pe - 2.0) * uu
    residual, scale, method = operator_residual(u, rhs, nodes, pe, domain)
    worst = float(np.max(np.abs(residual) / scale))
    tol = 1e-8 if method == "jets" else TOLERANCE[method]
    if worst > tol:
        raise HypothesisViolation(
            f"u={u} does not solve the first equation with f1={f1} (residual {worst:.3e})"
        )

    integral = integrate(
        lambda x: (evaluate(f1, x) - evaluate(f2, x)) * np.abs(evaluate(u, x)) ** pe, domain, rule
    )

    cands = list(candidates) if candidates is not None else default_candidates(domain)
    r_min = np.inf
    for v in cands:
        pts = check_pair(u, v, nodes, pe)
        r = np.asarray(eval_R_nonlinear(u, v, f, pts, pe))
        r_min = min(r_min, float(np.min(r / np.maximum(np.abs(r), 1.0))))

    conclusion = sturm_conclusion(integral, r_min)
    logger.info("sturm: ∫(f1-f2)u^p = %.12g, min R = %.3e -> %s", integral, r_min, conclusion)
    return SturmReport(
        u=str(u),
        f1=str(f1),
        f2=str(f2),
        f=f.label,
        p=pe,
        equation_residual=worst,
        contradiction_integral=integral,
        candidates=[str(v) for v in cands],
        pointwise_R_min=r_min,
        conclusion=conclusion,
        passed=conclusion == "no_positive_v_possible",
    )
