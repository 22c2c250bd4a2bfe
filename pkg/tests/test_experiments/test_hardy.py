"""Tests for the Hardy-type inequality scenario."""

from __future__ import annotations

import math

import pytest

from picone_lab.errors import AdmissibilityViolation
from picone_lab.experiments import run_hardy
from picone_lab.fields import catalog, resolve_profile
from picone_lab.quadrature import Domain

UNIT = Domain.interval(0.0, 1.0)
PI4 = math.pi**4


def _corpus() -> list[object]:
    return [catalog("bubble"), *(catalog("sine_mode", [float(k)]) for k in (1, 2, 3))]


def test_sharp_constant_from_the_first_mode() -> None:
    report = run_hardy(
        catalog("sine_mode", [1.0]), resolve_profile("linear"), catalog("poly", [1.0]), PI4, 2.0, _corpus(), UNIT
    )
    assert report.supersolution_holds
    assert report.supersolution_method == "jets"
    assert report.all_pass
    assert report.passed
    ratios = {row.u: row.ratio for row in report.rows}
    assert ratios["bubble"] == pytest.approx(504.0, rel=1e-10)
    assert ratios["sine_mode 1"] == pytest.approx(PI4, rel=1e-10)
    assert ratios["sine_mode 2"] == pytest.approx(16.0 * PI4, rel=1e-10)


def test_too_large_lambda_claims_nothing() -> None:
    report = run_hardy(
        catalog("sine_mode", [1.0]),
        resolve_profile("linear"),
        catalog("poly", [1.0]),
        2.0 * PI4,
        2.0,
        _corpus(),
        UNIT,
    )
    assert not report.supersolution_holds
    assert not report.all_pass
    # a failed hypothesis is not a failed check
    assert report.passed


def test_corpus_must_vanish_on_the_boundary() -> None:
    with pytest.raises(AdmissibilityViolation):
        run_hardy(
            catalog("sine_mode", [1.0]),
            resolve_profile("linear"),
            catalog("poly", [1.0]),
            PI4,
            2.0,
            [catalog("gauss_bump", [0.25])],
            UNIT,
        )


def test_supersolution_must_be_positive() -> None:
    with pytest.raises(AdmissibilityViolation):
        run_hardy(
            catalog("sine_mode", [2.0]),
            resolve_profile("linear"),
            catalog("poly", [1.0]),
            PI4,
            2.0,
            _corpus(),
            UNIT,
        )


def test_trivial_corpus_function_rejected() -> None:
    with pytest.raises(AdmissibilityViolation) as exc:
        run_hardy(
            catalog("sine_mode", [1.0]),
            resolve_profile("linear"),
            catalog("poly", [1.0]),
            PI4,
            2.0,
            [catalog("bubble"), catalog("poly", [0.0])],
            UNIT,
        )
    assert "trivial" in str(exc.value)
