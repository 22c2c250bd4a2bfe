"""Discrete Rayleigh quotient of the p-biharmonic operator and its minimization.

Q(u) = Σ |(Δ_h u)_i|^p h^n / Σ g_i |u_i|^p h^n. The minimizer solves
A φ(A u) = Q g φ(u) with φ(t) = |t|^(p-2) t, which is the discrete form of
Δ(|Δu|^(p-2) Δu) = λ g |u|^(p-2) u under Navier conditions.
"""

from __future__ import annotations

import logging

import numpy as np
import scipy.sparse as sp
from scipy.sparse.linalg import splu

from picone_lab.errors import HypothesisViolation, ZeroDenominator
from picone_lab.jets.expr import FieldExpr
from picone_lab.models.fields import ExponentPair
from picone_lab.models.solver import EigenResult
from picone_lab.quadrature.domain import Domain
from picone_lab.solver.grid import (
    GridFunction,
    dirichlet_laplacian,
    grid_nodes,
    sample,
    sine_mode_grid,
)

logger = logging.getLogger(__name__)

CLAMP = 1e-12
ARMIJO = 1e-4
MAX_HALVINGS = 40


def _phi(t: np.ndarray, p: float) -> np.ndarray:
    return t * np.maximum(np.abs(t), CLAMP) ** (p - 2.0)


def _weighted_norm(u: np.ndarray, g: np.ndarray, p: float, cell: float) -> float:
    return float(np.sum(g * np.abs(u) ** p) * cell)


def rayleigh_quotient(u: GridFunction, g: GridFunction | np.ndarray, p: float | ExponentPair) -> float:
    pe = ExponentPair.of(p).p
    gv = g.values if isinstance(g, GridFunction) else np.asarray(g, dtype=float)
    den = _weighted_norm(u.values, gv, pe, u.cell_volume)
    if den <= 0.0:
        raise ZeroDenominator("Σ g|u|^p h^n must be positive")
    lap = dirichlet_laplacian(u.domain, u.N) @ u.values
    return float(np.sum(np.abs(lap) ** pe) * u.cell_volume) / den


def centre_index(domain: Domain, N: int) -> int:
    nodes = grid_nodes(domain, N)
    return int(np.argmin(np.sum((nodes - domain.center) ** 2, axis=1)))


def positive_weight(g: FieldExpr, domain: Domain, N: int) -> GridFunction:
    gw = sample(g, domain, N)
    if not np.all(gw.values > 0.0):
        raise HypothesisViolation(
            f"weight g={g} must be > 0 at every interior node (min {gw.values.min():.6g})"
        )
    return gw


def principal_eigenvalue(
    domain: Domain,
    g: FieldExpr,
    p: float | ExponentPair,
    N: int = 399,
    max_iters: int = 500,
    grad_tol: float = 1e-6,
    step0: float = 1.0,
) -> EigenResult:
    """Minimize the discrete Rayleigh quotient from the sampled first sine mode.

    Each step moves along -B⁻¹r, where r = Aφ(Au) - Q g φ(u) and
    B = Aᵀ diag(|Au|^(p-2)) A is the lagged Navier operator, with step length
    at most 1 halved until the Armijo condition holds. Iterates are renormalized
    to Σ g|u|^p h^n = 1. The run stops when ‖r‖∞ / ‖Aφ(Au)‖∞ <= grad_tol, when no
    step decreases Q any more, or after ``max_iters`` steps (``converged=False``).
    """
    pe = ExponentPair.of(p).p
    a = dirichlet_laplacian(domain, N)
    gv = positive_weight(g, domain, N).values
    u0 = sine_mode_grid(domain, N)
    cell = u0.cell_volume

    def normalize(x: np.ndarray) -> np.ndarray:
        return x / _weighted_norm(x, gv, pe, cell) ** (1.0 / pe)

    def quotient(x: np.ndarray) -> float:
        den = _weighted_norm(x, gv, pe, cell)
        if den <= 0.0:
            raise ZeroDenominator("iterate collapsed to zero")
        return float(np.sum(np.abs(a @ x) ** pe) * cell) / den

    u = normalize(u0.values)
    q = quotient(u)
    history = [q]
    grad_norm = np.inf
    converged = False
    iterations = 0

    for iterations in range(1, max_iters + 1):
        au = a @ u
        flux = a @ _phi(au, pe)
        r = flux - q * gv * _phi(u, pe)
        grad_norm = float(np.max(np.abs(r)) / np.max(np.abs(flux)))
        if grad_norm <= grad_tol:
            converged = True
            break

        w = np.maximum(np.abs(au), CLAMP) ** (pe - 2.0)
        b = (a.T @ sp.diags(w) @ a).tocsc()
        d = splu(b).solve(r)
        slope = pe * cell * float(r @ d)

        tau = min(step0, 1.0)
        for _ in range(MAX_HALVINGS):
            trial = normalize(u - tau * d)
            q_trial = quotient(trial)
            if q_trial <= q - ARMIJO * tau * slope:
                break
            tau /= 2.0
        else:
            logger.info("descent stalled at Q=%.12g (grad norm %.3e)", q, grad_norm)
            converged = True
            break

        u, q = trial, q_trial
        history.append(q)
        logger.debug("iter %d: Q=%.12g tau=%.3g grad=%.3e", iterations, q, tau, grad_norm)

    if not converged:
        logger.warning(
            "principal_eigenvalue: %d iterations exhausted, grad norm %.3e > %.1e",
            max_iters, grad_norm, grad_tol,
        )

    if u[centre_index(domain, N)] < 0.0:
        u = -u
    return EigenResult(
        lambda_=q,
        method="descent",
        p=pe,
        N=N,
        iterations=iterations,
        grad_norm=grad_norm,
        history=history,
        converged=converged,
        positive=bool(np.all(u > 0.0)),
        eigenfunction=u0.with_values(u),
    )
