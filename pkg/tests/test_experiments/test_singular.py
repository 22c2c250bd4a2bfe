"""Tests for proportionality in the singular system."""

from __future__ import annotations

import math

import pytest

from picone_lab.errors import ResidualTooLarge
from picone_lab.experiments import run_singular_system
from picone_lab.fields import catalog, resolve_profile
from picone_lab.quadrature import Domain

UNIT = Domain.interval(0.0, 1.0)
C1 = math.pi**-4


def test_recovers_the_constant() -> None:
    report = run_singular_system(catalog("sine_mode", [1.0]), C1, resolve_profile("linear"), 2.0, UNIT)
    assert report.c1_recovered == pytest.approx(C1, rel=1e-12)
    assert report.relative_deviation <= 1e-10
    assert report.residual_first <= 1e-8
    assert report.residual_second <= 1e-8
    assert abs(report.int_R) <= 1e-10
    assert report.passed


def test_wrong_constant_is_not_a_solution() -> None:
    with pytest.raises(ResidualTooLarge):
        run_singular_system(catalog("sine_mode", [1.0]), 2.0 * C1, resolve_profile("linear"), 2.0, UNIT)


def test_rescaled_interval() -> None:
    domain = Domain.interval(0.0, 2.0)
    c1 = (math.pi / 2.0) ** -4
    report = run_singular_system(catalog("sine_mode", [1.0], domain), c1, resolve_profile("linear"), 2.0, domain)
    assert report.c1_recovered == pytest.approx(c1, rel=1e-10)
    assert report.residual_first <= 1e-8
    assert report.residual_second <= 1e-8
    assert abs(report.int_R) <= 1e-10
    assert report.passed
