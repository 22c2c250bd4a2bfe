"""Tests for the power identity evaluators."""

from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from picone_lab.errors import DimensionMismatch, DomainError, SingularEvaluation
from picone_lab.fields import catalog
from picone_lab.jets import coordinate, parse_field
from picone_lab.models.evaluation import PiconeVariant
from picone_lab.picone import eval_L_power, eval_R_power, power_batch


def _parabola() -> object:
    return catalog("poly", [0.0, 1.0, -1.0])


def _sine() -> object:
    return catalog("sine_mode", [1.0])


class TestEvalRPower:
    def test_closed_form_at_the_midpoint(self) -> None:
        # ∇u = ∇v = 0 at 1/2, so R = (Δu - rΔv)^2 with r = u/v = 1/4
        r = eval_R_power(_parabola(), _sine(), [0.5], 2.0)
        assert isinstance(r, float)
        assert r == pytest.approx((math.pi**2 / 4 - 2.0) ** 2, rel=1e-12)

    def test_batch_returns_array(self) -> None:
        r = eval_R_power(_parabola(), _sine(), np.array([[0.3], [0.6]]), 3.0)
        assert isinstance(r, np.ndarray)
        assert r.shape == (2,)

    def test_v_must_be_positive(self) -> None:
        with pytest.raises(DomainError):
            eval_R_power(catalog("bubble"), catalog("sine_mode", [2.0]), [0.75], 2.0)

    def test_dimensions_must_agree(self) -> None:
        with pytest.raises(DimensionMismatch):
            eval_R_power(_sine(), parse_field("(+ x0 x1)"), [0.5], 2.0)

    def test_degenerate_lap_v_below_two(self) -> None:
        # Δv = 0 for a linear v: |Δv|^(p-2) is singular for p < 2
        v = 1.0 + coordinate(0)
        with pytest.raises(SingularEvaluation):
            eval_R_power(_parabola(), v, [0.5], 1.5)

    def test_p_must_exceed_one(self) -> None:
        with pytest.raises(ValueError):
            eval_R_power(_parabola(), _sine(), [0.5], 1.0)


class TestEvalLPower:
    def test_terms_sum_to_L(self) -> None:
        ev = eval_L_power(catalog("bubble"), _sine(), [0.3], 3.0)
        assert ev.variant == PiconeVariant.POWER
        assert ev.L == pytest.approx(ev.term_I + ev.term_II + ev.term_III, rel=1e-14)
        assert abs(ev.residual) <= 1e-10 * ev.scale
        assert ev.L >= 0.0
        assert ev.admissible

    @pytest.mark.parametrize("p", [1.5, 2.0, 2.5, 3.0, 4.0])
    @pytest.mark.parametrize("alpha", [0.1, 1.0, 7.0])
    def test_equality_for_proportional_pair(self, p: float, alpha: float) -> None:
        v = _sine()
        batch = power_batch(alpha * v, v, np.linspace(0.05, 0.95, 25)[:, None], p)
        assert np.max(np.abs(batch.L) / batch.scale) <= 1e-11

    def test_every_term_nonnegative_when_admissible(self) -> None:
        batch = power_batch(_parabola(), _sine(), np.linspace(0.05, 0.95, 40)[:, None], 3.0)
        assert np.all(batch.admissible)
        for term in (batch.term_I, batch.term_II, batch.term_III):
            assert np.all(term >= -1e-12 * batch.scale)

    def test_inadmissible_points_flagged_not_raised(self) -> None:
        # u < 0 outside (0, 1): the identity still holds, the sign claim does not
        u = _parabola()
        batch = power_batch(u, 2.0 - coordinate(0) ** 2, [[1.2], [0.5]], 2.0)
        assert batch.admissible.tolist() == [False, True]
        assert np.all(np.abs(batch.residual) <= 1e-10 * batch.scale)

    def test_rectangle_pair(self) -> None:
        rect_u = parse_field("(* (* x0 (- 1 x0)) (* x1 (- 2 x1)))")
        rect_v = parse_field("(* (sin (* pi x0)) (sin (* (/ pi 2) x1)))")
        ev = eval_L_power(rect_u, rect_v, [0.3, 1.4], 2.5)
        assert abs(ev.residual) <= 1e-10 * ev.scale
        assert ev.L >= -1e-12 * ev.scale


@settings(max_examples=80, derandomize=True)
@given(x=st.floats(0.02, 0.98), p=st.floats(1.1, 6.0))
def test_identity_holds_on_bubble_and_sine(x: float, p: float) -> None:
    ev = eval_L_power(catalog("bubble"), _sine(), [x], p)
    assert abs(ev.residual) <= 1e-10 * ev.scale
    assert ev.L >= -1e-12 * ev.scale
