"""Uniform interior grids, grid functions and the zero-Dirichlet Laplacian stencil."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp

from picone_lab.errors import DimensionMismatch
from picone_lab.jets.expr import FieldExpr, evaluate
from picone_lab.quadrature.domain import Domain


@dataclass(frozen=True)
class GridFunction:
    """Values at the N (or N x N) interior nodes; boundary values are implicitly 0.

    Spacing is h = (b - a) / (N + 1) per axis. In 2-D the values are stored
    flattened with x0 as the slow index.
    """

    domain: Domain
    N: int
    values: np.ndarray

    def __post_init__(self) -> None:
        if self.N < 3:
            raise ValueError(f"N must be >= 3, got {self.N}")
        expected = self.N**self.domain.dimension
        if self.values.shape != (expected,):
            raise DimensionMismatch(
                f"grid function needs {expected} values, got shape {self.values.shape}"
            )

    @property
    def h(self) -> np.ndarray:
        return spacing(self.domain, self.N)

    @property
    def cell_volume(self) -> float:
        return float(np.prod(self.h))

    def nodes(self) -> np.ndarray:
        return grid_nodes(self.domain, self.N)

    def with_values(self, values: np.ndarray) -> GridFunction:
        return GridFunction(self.domain, self.N, np.asarray(values, dtype=float))

    def __mul__(self, c: float) -> GridFunction:
        return self.with_values(c * self.values)

    __rmul__ = __mul__


def spacing(domain: Domain, N: int) -> np.ndarray:
    return domain.lengths / (N + 1)


def grid_nodes(domain: Domain, N: int) -> np.ndarray:
    """Interior nodes, shape (N**n, n), x0 varying slowest."""
    axes = [lo + h * np.arange(1, N + 1) for lo, h in zip(domain.lower, spacing(domain, N), strict=True)]
    if domain.dimension == 1:
        return axes[0][:, None]
    g0, g1 = np.meshgrid(axes[0], axes[1], indexing="ij")
    return np.column_stack([g0.ravel(), g1.ravel()])


def sample(expr: FieldExpr, domain: Domain, N: int) -> GridFunction:
    """A field's values at the interior nodes."""
    values = np.asarray(evaluate(expr, grid_nodes(domain, N)), dtype=float).reshape(-1)
    return GridFunction(domain, N, values)


def sine_mode_grid(domain: Domain, N: int) -> GridFunction:
    """The first Dirichlet sine mode, positive at every interior node."""
    t = (grid_nodes(domain, N) - domain.lower) / domain.lengths
    return GridFunction(domain, N, np.prod(np.sin(np.pi * t), axis=1))


def _second_difference(n: int, h: float) -> sp.csr_matrix:
    return sp.diags([1.0, -2.0, 1.0], [-1, 0, 1], shape=(n, n), format="csr") / h**2


def dirichlet_laplacian(domain: Domain, N: int) -> sp.csc_matrix:
    """The 3-point (1-D) or 5-point (2-D) stencil with zero boundary neighbours."""
    h = spacing(domain, N)
    if domain.dimension == 1:
        return _second_difference(N, h[0]).tocsc()
    eye = sp.identity(N, format="csr")
    a = sp.kron(_second_difference(N, h[0]), eye) + sp.kron(eye, _second_difference(N, h[1]))
    return a.tocsc()


def navier_bilaplacian(domain: Domain, N: int) -> sp.csc_matrix:
    """A·A: composing the Dirichlet stencil with itself gives u = 0 = Δu on the boundary."""
    a = dirichlet_laplacian(domain, N)
    return (a @ a).tocsc()


def discrete_laplacian(u: GridFunction) -> GridFunction:
    return u.with_values(dirichlet_laplacian(u.domain, u.N) @ u.values)
