"""Tests for nonlinearity profiles and their hypothesis checks."""

from __future__ import annotations

import numpy as np
import pytest

from picone_lab.errors import DimensionMismatch, DomainError, SingularEvaluation
from picone_lab.fields import (
    PROFILES,
    NonlinearityProfile,
    nonlinearity_C1_gap,
    nonlinearity_C2_check,
    resolve_profile,
)
from picone_lab.jets import coordinate, evaluate


class TestResolveProfile:
    def test_power_depends_on_p(self) -> None:
        f = resolve_profile("power", 3.0)
        assert f.label == "power 3"
        f0, f1, f2 = f.derivatives(2.0)
        assert float(f0) == pytest.approx(4.0)
        assert float(f1) == pytest.approx(4.0)
        assert float(f2) == pytest.approx(2.0)

    def test_every_named_profile_resolves(self) -> None:
        for name in PROFILES:
            f = resolve_profile(name, 2.5)
            assert np.all(np.isfinite(f.derivatives(np.array([0.5, 1.0, 2.0]))[0]))

    def test_s_expression_in_y(self) -> None:
        f = resolve_profile("(* y y)")
        assert f.label == "(* y y)"
        np.testing.assert_allclose(f.derivatives(np.array([1.0, 3.0]))[0], [1.0, 9.0])

    def test_derivatives_keep_input_shape(self) -> None:
        f = resolve_profile("softplus")
        values, first, second = f.derivatives(np.ones((3, 4)))
        assert values.shape == first.shape == second.shape == (3, 4)

    def test_composition_with_a_field(self) -> None:
        f = resolve_profile("double")
        composed = f.of(coordinate(0) ** 2)
        assert float(evaluate(composed, [3.0])[()]) == pytest.approx(18.0)

    def test_profile_must_be_one_dimensional(self) -> None:
        with pytest.raises(DimensionMismatch):
            NonlinearityProfile(coordinate(1, 2), "bad")


class TestC1Gap:
    @pytest.mark.parametrize("p", [1.5, 2.0, 3.0, 4.0])
    def test_power_profile_is_on_the_boundary(self, p: float) -> None:
        gap = nonlinearity_C1_gap(resolve_profile("power", p), np.linspace(0.1, 3.0, 11), p)
        np.testing.assert_allclose(gap, 0.0, atol=1e-12)

    def test_scalar_in_scalar_out(self) -> None:
        gap = nonlinearity_C1_gap(resolve_profile("linear"), 2.0, 2.0)
        assert isinstance(gap, float)
        assert gap == pytest.approx(0.0)

    def test_statement_variant_singular_at_p_two(self) -> None:
        with pytest.raises(SingularEvaluation):
            nonlinearity_C1_gap(resolve_profile("linear"), 1.0, 2.0, variant="statement")

    def test_statement_variant_uses_reciprocal_exponent(self) -> None:
        f = resolve_profile("linear")
        # f' - (p-1) f^((p-1)/(p-2)) at p = 3, y = 2: 1 - 2 * 4
        assert nonlinearity_C1_gap(f, 2.0, 3.0, variant="statement") == pytest.approx(-7.0)

    def test_nonpositive_f_rejected(self) -> None:
        with pytest.raises(DomainError):
            nonlinearity_C1_gap(resolve_profile("linear"), -1.0, 2.0)


def test_C2_sign() -> None:
    assert nonlinearity_C2_check(resolve_profile("sqrt"), 1.0) < 0.0
    assert nonlinearity_C2_check(resolve_profile("linear"), 1.0) == 0.0
    assert nonlinearity_C2_check(resolve_profile("power", 3.0), 1.0) > 0.0
