"""Tests for the nonlinear identity: both forms, the reduction to the power identity, npi1_gap."""

from __future__ import annotations

import numpy as np
import pytest

from picone_lab.errors import DomainError
from picone_lab.fields import catalog, resolve_profile
from picone_lab.models.evaluation import PiconeVariant
from picone_lab.picone import (
    eval_L_nonlinear,
    eval_R_nonlinear,
    eval_R_power,
    nonlinear_batch,
    npi1_gap,
    printed_discrepancy,
)

POINTS = np.linspace(0.05, 0.95, 31)[:, None]


def _bubble() -> object:
    return catalog("bubble")


def _sine() -> object:
    return catalog("sine_mode", [1.0])


@pytest.mark.parametrize("p", [1.5, 2.0, 2.5, 3.0, 4.0])
@pytest.mark.parametrize("profile", ["linear", "power", "sqrt", "softplus"])
def test_rederived_form_matches_R(p: float, profile: str) -> None:
    batch = nonlinear_batch(_bubble(), _sine(), resolve_profile(profile, p), POINTS, p)
    assert batch.variant == PiconeVariant.NONLINEAR_REDERIVED
    assert np.max(np.abs(batch.residual) / batch.scale) <= 1e-10


@pytest.mark.parametrize("p", [1.5, 2.0, 3.0])
def test_printed_form_differs_by_the_predicted_term(p: float) -> None:
    f = resolve_profile("linear", p)
    batch = nonlinear_batch(_bubble(), _sine(), f, POINTS, p, form="printed")
    predicted = printed_discrepancy(_bubble(), _sine(), f, POINTS, p)
    assert np.max(np.abs(predicted)) > 1e-6
    np.testing.assert_allclose(batch.residual, predicted, rtol=1e-8, atol=1e-10 * np.max(batch.scale))


def test_printed_discrepancy_vanishes_where_grad_u_does() -> None:
    # the bubble is symmetric about 1/2
    d = printed_discrepancy(_bubble(), _sine(), resolve_profile("linear"), [[0.5]], 3.0)
    assert abs(float(d[0])) <= 1e-14


@pytest.mark.parametrize("p", [1.5, 2.0, 2.5, 3.0, 4.0])
def test_power_profile_reduces_to_power_identity(p: float) -> None:
    r_nl = np.asarray(eval_R_nonlinear(_bubble(), _sine(), resolve_profile("power", p), POINTS, p))
    r_pw = np.asarray(eval_R_power(_bubble(), _sine(), POINTS, p))
    assert np.max(np.abs(r_nl - r_pw) / np.maximum(np.abs(r_pw), 1.0)) <= 1e-13


def test_nonnegative_when_f_admissible() -> None:
    batch = nonlinear_batch(_bubble(), _sine(), resolve_profile("linear"), POINTS, 2.0)
    assert np.all(batch.admissible)
    assert np.min(batch.L / batch.scale) >= -1e-12


@pytest.mark.parametrize("p", [2.5, 3.0, 4.0])
def test_nonnegative_at_admissible_points(p: float) -> None:
    batch = nonlinear_batch(_bubble(), _sine(), resolve_profile("linear", p), POINTS, p)
    assert np.any(batch.admissible)
    assert np.min(batch.L[batch.admissible] / batch.scale[batch.admissible]) >= -1e-12


def test_admissible_flag_tracks_C1() -> None:
    # f = y at p = 3 needs 1 >= 2 sqrt(v), false near the top of the sine
    batch = nonlinear_batch(_bubble(), _sine(), resolve_profile("linear", 3.0), [[0.02], [0.5]], 3.0)
    assert batch.admissible.tolist() == [True, False]


def test_single_point_evaluation() -> None:
    ev = eval_L_nonlinear(_bubble(), _sine(), resolve_profile("sqrt"), [0.4], 2.5)
    assert ev.point == [0.4]
    assert abs(ev.residual) <= 1e-10 * ev.scale
    assert isinstance(eval_R_nonlinear(_bubble(), _sine(), resolve_profile("sqrt"), [0.4], 2.5), float)


def test_f_of_v_must_be_positive() -> None:
    with pytest.raises(DomainError):
        eval_R_nonlinear(_bubble(), _sine(), resolve_profile("(- y 2)"), [0.5], 2.0)


class TestNpi1Gap:
    @pytest.mark.parametrize("p", [1.5, 2.0, 3.0])
    def test_zero_when_u_equals_v_with_power_profile(self, p: float) -> None:
        gap = npi1_gap(_sine(), _sine(), resolve_profile("power", p), POINTS, p)
        np.testing.assert_allclose(gap, 0.0, atol=1e-12)

    def test_scalar_for_single_point(self) -> None:
        gap = npi1_gap(_bubble(), _sine(), resolve_profile("linear"), [0.3], 2.0)
        assert isinstance(gap, float)

    def test_nonzero_off_the_equality_family(self) -> None:
        u = 1.0 + _bubble()
        gap = npi1_gap(u, _sine(), resolve_profile("linear"), [0.3], 2.0)
        assert abs(gap) > 1e-3
