"""Tests for identity sweeps over many points."""

from __future__ import annotations

import numpy as np
import pytest

from picone_lab.errors import AdmissibilityViolation
from picone_lab.fields import catalog, resolve_field, resolve_profile
from picone_lab.models.evaluation import PiconeVariant
from picone_lab.picone import check_pair, sweep_dunninger, sweep_nonlinear, sweep_power
from picone_lab.quadrature.domain import Domain

UNIT = Domain.interval(0.0, 1.0)
RECT = Domain.rectangle(0.0, 1.0, 0.0, 2.0)


def _points(domain: Domain, count: int = 200) -> np.ndarray:
    return domain.random_samples(count, seed=7)


class TestSweepPower:
    @pytest.mark.parametrize("p", [1.5, 2.0, 2.5, 3.0, 4.0])
    def test_interval(self, p: float) -> None:
        sweep = sweep_power(catalog("bubble"), catalog("sine_mode", [1.0]), p, _points(UNIT))
        assert sweep.variant == PiconeVariant.POWER
        assert sweep.point_count == sweep.admissible_count == 200
        assert sweep.max_residual <= 1e-10
        assert sweep.min_L >= -1e-12
        assert sweep.min_term_I >= -1e-12

    def test_rectangle(self) -> None:
        u = resolve_field("product2d bubble | sine_mode 1", RECT)
        v = resolve_field("sine_mode 1", RECT)
        sweep = sweep_power(u, v, 3.0, _points(RECT))
        assert sweep.u == "product2d bubble | sine_mode 1"
        assert sweep.max_residual <= 1e-10
        assert sweep.min_L >= -1e-12

    def test_inadmissible_v_rejected(self) -> None:
        with pytest.raises(AdmissibilityViolation) as exc:
            sweep_power(catalog("bubble"), catalog("sine_mode", [2.0]), 2.0, _points(UNIT))
        assert 0 < len(exc.value.points) <= 100


class TestSweepNonlinear:
    def test_reports_printed_diagnostic(self) -> None:
        f = resolve_profile("sqrt")
        sweep = sweep_nonlinear(catalog("bubble"), catalog("sine_mode", [1.0]), f, 3.0, _points(UNIT))
        assert sweep.f == "sqrt"
        assert sweep.variant == PiconeVariant.NONLINEAR_REDERIVED
        assert sweep.max_residual <= 1e-10
        assert sweep.max_printed_discrepancy is not None and sweep.max_printed_discrepancy > 1e-8
        assert sweep.max_discrepancy_mismatch is not None and sweep.max_discrepancy_mismatch <= 1e-8
        assert sweep.admissible_count < sweep.point_count

    def test_printed_form(self) -> None:
        f = resolve_profile("linear", 2.5)
        sweep = sweep_nonlinear(
            catalog("bubble"), catalog("sine_mode", [1.0]), f, 2.5, _points(UNIT), form="printed"
        )
        assert sweep.variant == PiconeVariant.NONLINEAR_PRINTED
        assert sweep.max_residual == pytest.approx(sweep.max_printed_discrepancy)


def test_sweep_dunninger_cross_check() -> None:
    sweep = sweep_dunninger(catalog("bubble"), catalog("sine_mode", [1.0]), _points(UNIT))
    assert sweep.p == 2.0
    assert sweep.max_residual <= 1e-12
    assert sweep.max_power_mismatch is not None and sweep.max_power_mismatch <= 1e-12


def test_check_pair_returns_points() -> None:
    pts = check_pair(catalog("bubble"), catalog("sine_mode", [1.0]), [0.2, 0.4], 2.0)
    assert pts.shape == (2, 1)
