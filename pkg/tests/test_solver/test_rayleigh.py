"""Tests for the discrete Rayleigh quotient and its descent minimizer."""

from __future__ import annotations

import math
from collections.abc import Callable

import numpy as np
import pytest

from picone_lab.errors import HypothesisViolation, ZeroDenominator
from picone_lab.fields import catalog
from picone_lab.quadrature import Domain
from picone_lab.solver import GridFunction, p2_oracle, principal_eigenvalue, rayleigh_quotient
from picone_lab.solver.grid import sine_mode_grid

UNIT = Domain.interval(0.0, 1.0)
ONE = catalog("poly", [1.0])
RAMP = catalog("poly", [1.0, 0.5])


def test_quotient_of_the_sine_mode(discrete_eigenvalue: Callable[..., float]) -> None:
    u = sine_mode_grid(UNIT, 49)
    assert rayleigh_quotient(u, np.ones(49), 2.0) == pytest.approx(discrete_eigenvalue(49, 1.0), rel=1e-12)


def test_quotient_of_zero() -> None:
    with pytest.raises(ZeroDenominator):
        rayleigh_quotient(GridFunction(UNIT, 5, np.zeros(5)), np.ones(5), 2.0)


def test_descent_at_p2_matches_closed_form(discrete_eigenvalue: Callable[..., float]) -> None:
    result = principal_eigenvalue(UNIT, ONE, 2.0, N=49)
    assert result.method == "descent"
    assert result.converged
    assert result.positive
    assert result.lambda_ == pytest.approx(discrete_eigenvalue(49, 1.0), rel=1e-8)


def test_descent_matches_oracle_with_varying_weight() -> None:
    descent = principal_eigenvalue(UNIT, RAMP, 2.0, N=49)
    oracle = p2_oracle(UNIT, RAMP, N=49)
    assert descent.converged
    assert abs(descent.lambda_ - oracle.lambda_) <= 1e-8 * oracle.lambda_


@pytest.mark.parametrize("p", [1.5, 3.0, 4.0])
def test_history_is_monotone(p: float) -> None:
    result = principal_eigenvalue(UNIT, ONE, p, N=49)
    assert all(b <= a * (1.0 + 1e-12) for a, b in zip(result.history, result.history[1:], strict=False))
    assert result.lambda_ == result.history[-1]
    assert result.positive


def test_eigenfunction_is_normalized() -> None:
    result = principal_eigenvalue(UNIT, ONE, 3.0, N=49)
    u = result.eigenfunction
    assert float(np.sum(np.abs(u.values) ** 3) * u.cell_volume) == pytest.approx(1.0, rel=1e-10)


def test_grid_refinement_at_p3() -> None:
    coarse = principal_eigenvalue(UNIT, ONE, 3.0, N=49).lambda_
    fine = principal_eigenvalue(UNIT, ONE, 3.0, N=99).lambda_
    assert abs(coarse - fine) / fine <= 5e-3


def test_iteration_budget_reported() -> None:
    result = principal_eigenvalue(UNIT, ONE, 3.0, N=49, max_iters=1, grad_tol=1e-14)
    assert not result.converged
    assert result.iterations == 1


def test_weight_must_be_positive() -> None:
    with pytest.raises(HypothesisViolation):
        principal_eigenvalue(UNIT, catalog("poly", [-1.0]), 2.0, N=19)


@pytest.mark.slow
@pytest.mark.parametrize(("length", "expected"), [(1.0, math.pi**4), (2.0, math.pi**4 / 16.0)])
def test_continuum_limit_at_p2(length: float, expected: float) -> None:
    result = principal_eigenvalue(Domain.interval(0.0, length), ONE, 2.0, N=399)
    assert result.lambda_ == pytest.approx(expected, rel=1e-2)


@pytest.mark.slow
def test_self_convergence_at_p3() -> None:
    coarse = principal_eigenvalue(UNIT, ONE, 3.0, N=199).lambda_
    fine = principal_eigenvalue(UNIT, ONE, 3.0, N=399).lambda_
    assert abs(coarse - fine) / fine <= 1e-3


@pytest.mark.slow
@pytest.mark.parametrize("g", [ONE, RAMP], ids=["unit", "ramp"])
def test_descent_matches_oracle_on_the_full_grid(g: object) -> None:
    descent = principal_eigenvalue(UNIT, g, 2.0, N=399)
    oracle = p2_oracle(UNIT, g, N=399)
    assert abs(descent.lambda_ - oracle.lambda_) <= 1e-8 * oracle.lambda_


@pytest.mark.slow
def test_second_order_convergence_at_p2() -> None:
    errors = [abs(principal_eigenvalue(UNIT, ONE, 2.0, N=n).lambda_ - math.pi**4) for n in (99, 199, 399)]
    # h halves exactly between the three grids
    orders = [math.log2(coarse / fine) for coarse, fine in zip(errors, errors[1:], strict=False)]
    assert all(1.9 <= order <= 2.1 for order in orders)
