"""Tests for the Sturmian comparison scenario."""

from __future__ import annotations

import math

import pytest

from picone_lab.errors import HypothesisViolation
from picone_lab.experiments import run_sturm
from picone_lab.experiments.sturm import sturm_conclusion
from picone_lab.fields import catalog, resolve_profile
from picone_lab.jets import parse_field
from picone_lab.quadrature import Domain, QuadratureRule

UNIT = Domain.interval(0.0, 1.0)
PI4 = math.pi**4


def _run(u: str = "sine_mode 1", f1: list[float] | None = None, f2: list[float] | None = None) -> object:
    name, *params = u.split()
    return run_sturm(
        catalog(name, [float(x) for x in params]),
        catalog("poly", f1 or [PI4]),
        catalog("poly", f2 or [PI4 + 1.0]),
        2.0,
        resolve_profile("linear"),
        UNIT,
    )


def test_constant_gap() -> None:
    report = _run()
    assert report.contradiction_integral == pytest.approx(-0.5, rel=1e-10)
    assert report.equation_residual <= 1e-10
    assert report.pointwise_R_min >= -1e-10
    assert report.candidates == ["sine_mode 1", "parabola"]
    assert report.conclusion == "no_positive_v_possible"
    assert report.passed


def test_linear_gap() -> None:
    report = _run(f2=[PI4, 1.0])
    assert report.contradiction_integral == pytest.approx(-0.25, rel=1e-10)
    assert report.passed


def test_f1_must_stay_below_f2() -> None:
    with pytest.raises(HypothesisViolation):
        _run(f1=[PI4 + 1.0], f2=[PI4])


def test_u_must_be_positive() -> None:
    with pytest.raises(HypothesisViolation):
        _run(u="sine_mode 2", f1=[16.0 * PI4], f2=[16.0 * PI4 + 1.0])


def test_u_must_solve_the_first_equation() -> None:
    with pytest.raises(HypothesisViolation):
        _run(f1=[1.0], f2=[2.0])


@pytest.mark.parametrize(
    ("integral", "r_min", "expected"),
    [
        (-0.5, 0.0, "no_positive_v_possible"),
        (-0.5, -1e-3, "inconclusive"),
        (0.1, 0.0, "inconclusive"),
    ],
)
def test_conclusion_needs_observed_R_sign(integral: float, r_min: float, expected: str) -> None:
    assert sturm_conclusion(integral, r_min) == expected


# u = x(1-x)/4 + sin²(πx)/(4π²) has Δu = -sin²(πx), so at p = 1.5 the flux is
# -sin(πx) and Δ_p²u = π² sin(πx) = f1 u^(1/2) with f1 = π² sin(πx) / √u
_U_P15 = "(+ (* 0.25 x0 (- 1 x0)) (/ (^ (sin (* pi x0)) 2) (* 4 (^ pi 2))))"
_F1_P15 = f"(/ (* (^ pi 2) (sin (* pi x0))) (sqrt {_U_P15}))"


def test_below_two_reports_contradiction_only_when_R_is_nonnegative() -> None:
    report = run_sturm(
        parse_field(_U_P15, 1),
        parse_field(_F1_P15, 1),
        parse_field(f"(+ 1 {_F1_P15})", 1),
        1.5,
        resolve_profile("linear"),
        UNIT,
        rule=QuadratureRule(panels=8),
    )
    assert report.equation_residual <= 1e-6
    assert report.contradiction_integral < 0.0
    expected = "no_positive_v_possible" if report.pointwise_R_min >= -1e-10 else "inconclusive"
    assert report.conclusion == expected
    assert report.passed == (expected == "no_positive_v_possible")
