"""Composite tensor-product Gauss–Legendre quadrature."""

from __future__ import annotations

from collections.abc import Callable

import numpy as np
from numpy.polynomial.legendre import leggauss
from pydantic import BaseModel, ConfigDict, Field

from picone_lab.errors import QuadratureError
from picone_lab.quadrature.domain import Domain

Integrand = Callable[[np.ndarray], np.ndarray]


class QuadratureRule(BaseModel):
    """``panels`` equal panels per axis, ``order`` Gauss nodes per panel."""

    model_config = ConfigDict(frozen=True)

    panels: int = Field(default=32, ge=1)
    order: int = Field(default=5, ge=1, le=64)

    def axis_nodes(self, a: float, b: float) -> tuple[np.ndarray, np.ndarray]:
        """Nodes and weights on [a, b], panel by panel in increasing order."""
        x, w = leggauss(self.order)
        edges = np.linspace(a, b, self.panels + 1)
        half = np.diff(edges)[:, None] / 2
        mid = (edges[:-1] + edges[1:])[:, None] / 2
        return (mid + half * x).ravel(), (half * w).ravel()

    def nodes_weights(self, domain: Domain) -> tuple[np.ndarray, np.ndarray]:
        """Points of shape (m, n) and positive weights summing to the domain measure."""
        axes = [self.axis_nodes(lo, hi) for lo, hi in zip(domain.lower, domain.upper, strict=True)]
        if domain.dimension == 1:
            return axes[0][0][:, None], axes[0][1]
        (x0, w0), (x1, w1) = axes
        g0, g1 = np.meshgrid(x0, x1, indexing="ij")
        return np.column_stack([g0.ravel(), g1.ravel()]), np.outer(w0, w1).ravel()


def integrate(fn: Integrand, domain: Domain, rule: QuadratureRule | None = None) -> float:
    """∫_domain fn. ``fn`` maps an (m, n) array of points to m values."""
    rule = rule or QuadratureRule()
    points, weights = rule.nodes_weights(domain)
    values = np.asarray(fn(points), dtype=float).reshape(-1)
    if values.shape != weights.shape:
        raise QuadratureError(
            f"integrand returned {values.size} values for {weights.size} nodes"
        )
    if not np.all(np.isfinite(values)):
        raise QuadratureError("integrand is not finite at every quadrature node")
    return float(np.dot(weights, values))
