"""Tests for Domain parsing, geometry and sample sets."""

from __future__ import annotations

import numpy as np
import pytest

from picone_lab.errors import ConfigError
from picone_lab.quadrature.domain import Domain


class TestParse:
    def test_interval(self) -> None:
        d = Domain.parse("interval 0 1")
        assert d == Domain.interval(0.0, 1.0)
        assert d.dimension == 1
        assert d.describe() == "interval 0 1"

    def test_rectangle(self) -> None:
        d = Domain.parse("rectangle 0 1 0 2")
        assert d.dimension == 2
        assert d.measure == pytest.approx(2.0)
        np.testing.assert_allclose(d.center, [0.5, 1.0])

    @pytest.mark.parametrize(
        "text",
        ["", "interval 1 0", "interval 0", "rectangle 0 1 0", "triangle 0 1", "interval a b"],
    )
    def test_malformed(self, text: str) -> None:
        with pytest.raises(ConfigError) as exc:
            Domain.parse(text)
        assert exc.value.key == "domain"


def test_strictly_contains() -> None:
    small, big = Domain.interval(0.0, 1.0), Domain.interval(0.0, 2.0)
    assert big.strictly_contains(small)
    assert not small.strictly_contains(big)
    assert not small.strictly_contains(small)
    assert not big.strictly_contains(Domain.rectangle(0.0, 1.0, 0.0, 1.0))


class TestSamples:
    def test_random_samples_are_deterministic(self) -> None:
        d = Domain.rectangle(0.0, 1.0, 0.0, 2.0)
        np.testing.assert_array_equal(d.random_samples(50, seed=3), d.random_samples(50, seed=3))
        assert not np.array_equal(d.random_samples(50, seed=3), d.random_samples(50, seed=4))

    def test_random_samples_respect_margin(self) -> None:
        pts = Domain.interval(0.0, 1.0).random_samples(1000, seed=0)
        assert pts.shape == (1000, 1)
        assert pts.min() >= 0.02
        assert pts.max() <= 0.98

    def test_interior_samples(self) -> None:
        pts = Domain.rectangle(0.0, 1.0, 0.0, 2.0).interior_samples(4)
        assert pts.shape == (16, 2)
        np.testing.assert_allclose(pts[0], [0.125, 0.25])

    def test_boundary_points(self) -> None:
        pts, normals = Domain.interval(0.0, 1.0).boundary_points()
        assert pts.ravel().tolist() == [0.0, 1.0]
        assert normals.ravel().tolist() == [-1.0, 1.0]

        pts, normals = Domain.rectangle(0.0, 1.0, 0.0, 2.0).boundary_points(8)
        assert pts.shape == normals.shape == (32, 2)
        np.testing.assert_allclose(np.linalg.norm(normals, axis=1), 1.0)
