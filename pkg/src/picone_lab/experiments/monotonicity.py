"""Strict domain monotonicity of the principal eigenvalue: Ω1 ⊊ Ω2 ⇒ λ1(Ω1) > λ1(Ω2)."""

from __future__ import annotations

import logging

from picone_lab.errors import HypothesisViolation, NonConvergence
from picone_lab.jets.expr import FieldExpr
from picone_lab.models.fields import ExponentPair
from picone_lab.models.reports import MonotonicityReport
from picone_lab.models.solver import EigenResult
from picone_lab.quadrature.domain import Domain
from picone_lab.solver.rayleigh import principal_eigenvalue

logger = logging.getLogger(__name__)


def _solve(domain: Domain, g: FieldExpr, p: float, N: int, max_iters: int, grad_tol: float) -> EigenResult:
    result = principal_eigenvalue(domain, g, p, N=N, max_iters=max_iters, grad_tol=grad_tol)
    if not result.converged:
        raise NonConvergence(
            f"principal eigenvalue on {domain.describe()} did not converge in "
            f"{result.iterations} iterations (grad norm {result.grad_norm:.3e})"
        )
    return result


def run_monotonicity(
    domain1: Domain,
    domain2: Domain,
    g: FieldExpr,
    p: float | ExponentPair,
    N: int = 399,
    max_iters: int = 500,
    grad_tol: float = 1e-6,
) -> MonotonicityReport:
    """Both eigenvalues at N interior nodes per axis; the gap must exceed grad_tol·(λ1 + λ2)."""
    if not domain2.strictly_contains(domain1):
        raise HypothesisViolation(
            f"{domain1.describe()} is not strictly contained in {domain2.describe()}"
        )
    pe = ExponentPair.of(p).p
    first = _solve(domain1, g, pe, N, max_iters, grad_tol)
    second = _solve(domain2, g, pe, N, max_iters, grad_tol)
    gap = first.lambda_ - second.lambda_
    tolerance = grad_tol * (first.lambda_ + second.lambda_)
    logger.info("monotonicity p=%g: λ1=%.10g λ2=%.10g gap=%.6g", pe, first.lambda_, second.lambda_, gap)
    return MonotonicityReport(
        domain1=domain1.describe(),
        domain2=domain2.describe(),
        g=str(g),
        p=pe,
        N=N,
        lambda1=first.lambda_,
        lambda2=second.lambda_,
        strict_gap=gap,
        tolerance=tolerance,
        iterations=(first.iterations, second.iterations),
        passed=gap > tolerance,
    )
