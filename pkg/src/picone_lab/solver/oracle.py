"""Linear-algebra oracles at p = 2: inverse iteration on the Navier bilaplacian."""

from __future__ import annotations

import logging

import numpy as np
import scipy.sparse as sp
from scipy.sparse.linalg import SuperLU, splu

from picone_lab.errors import IterationFailure
from picone_lab.jets.expr import FieldExpr
from picone_lab.models.solver import EigenResult
from picone_lab.quadrature.domain import Domain
from picone_lab.solver.grid import navier_bilaplacian, sample, sine_mode_grid
from picone_lab.solver.rayleigh import centre_index, positive_weight

logger = logging.getLogger(__name__)

WARMUP_STEPS = 5


def _factor(k: sp.csc_matrix, m: sp.csc_matrix, shift: float) -> SuperLU | None:
    try:
        return splu((k - shift * m).tocsc())
    except RuntimeError:
        # exactly singular: the shift is an eigenvalue
        return None


def smallest_eigenpair(
    k: sp.csc_matrix,
    m: sp.csc_matrix,
    x0: np.ndarray,
    shift: float = 0.0,
    tol: float = 1e-12,
    max_iters: int = 100,
) -> tuple[float, np.ndarray, list[float]]:
    """Smallest eigenpair of K x = ρ M x (M diagonal positive), started from ``x0``.

    A few inverse-iteration steps with the fixed ``shift`` (which must lie below the
    smallest eigenvalue) select the eigenvector, then Rayleigh-quotient shifts
    finish until ρ changes by at most ``tol`` relative.
    """

    def rayleigh(x: np.ndarray) -> float:
        return float(x @ (k @ x)) / float(x @ (m @ x))

    def m_normalize(x: np.ndarray) -> np.ndarray:
        return x / np.sqrt(float(x @ (m @ x)))

    x = m_normalize(x0)
    rho = rayleigh(x)
    history = [rho]
    lu = _factor(k, m, shift)
    if lu is None:
        return shift, x, history
    for _ in range(WARMUP_STEPS):
        x = m_normalize(lu.solve(m @ x))
        rho = rayleigh(x)
        history.append(rho)

    for it in range(max_iters):
        lu = _factor(k, m, rho)
        if lu is None:
            return rho, x, history
        x = m_normalize(lu.solve(m @ x))
        new = rayleigh(x)
        history.append(new)
        logger.debug("inverse iteration %d: rho=%.15g", it, new)
        if abs(new - rho) <= tol * max(abs(new), 1.0):
            return new, x, history
        rho = new
    raise IterationFailure(f"inverse iteration did not settle within {max_iters} steps")


def p2_oracle(domain: Domain, g: FieldExpr, N: int = 399) -> EigenResult:
    """Smallest eigenvalue of (A·A) u = λ diag(g) u on the same grid as the descent."""
    b = navier_bilaplacian(domain, N)
    gw = positive_weight(g, domain, N)
    m = sp.diags(gw.values, format="csc")
    start = sine_mode_grid(domain, N)
    rho, x, history = smallest_eigenpair(b, m, start.values)
    if x[centre_index(domain, N)] < 0.0:
        x = -x
    x = x / np.sqrt(start.cell_volume)  # Σ g u² h^n = 1
    residual = b @ x - rho * (m @ x)
    return EigenResult(
        lambda_=rho,
        method="oracle",
        p=2.0,
        N=N,
        iterations=len(history) - 1,
        grad_norm=float(np.max(np.abs(residual)) / np.max(np.abs(b @ x))),
        history=history,
        converged=True,
        positive=bool(np.all(x > 0.0)),
        eigenfunction=start.with_values(x),
    )


def linearized_min_eigenvalue(a: FieldExpr, fprime0: float, domain: Domain, N: int = 399) -> float:
    """Smallest eigenvalue of A·A - diag(a f'(0)) (the linearization at 0, p = 2)."""
    b = navier_bilaplacian(domain, N)
    shift_diag = sample(a, domain, N).values * fprime0
    k = (b - sp.diags(shift_diag)).tocsc()
    eye = sp.identity(k.shape[0], format="csc")
    # every eigenvalue of A·A is positive, so this lies below the spectrum of k
    lower = -float(np.max(shift_diag)) - 1.0
    rho, _, _ = smallest_eigenpair(k, eye, sine_mode_grid(domain, N).values, shift=lower)
    return rho
