"""Second-order jets: value, gradient and Hessian of a scalar field.

A Jet2 may describe a single point (value shape ``()``, gradient ``(n,)``,
hessian ``(n, n)``) or a batch of ``m`` points (``(m,)``, ``(m, n)``,
``(m, n, n)``). All arithmetic broadcasts over the leading batch axis.

Hessians stay exactly symmetric: every update adds either a symmetric matrix
or a sum ``a⊗b + b⊗a``, and floating-point addition is commutative.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from picone_lab.errors import DimensionMismatch


def _outer(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return a[..., :, None] * b[..., None, :]


def _col(x: np.ndarray | float) -> np.ndarray:
    return np.asarray(x)[..., None]


def _mat(x: np.ndarray | float) -> np.ndarray:
    return np.asarray(x)[..., None, None]


@dataclass(frozen=True, slots=True)
class Jet2:
    value: np.ndarray
    gradient: np.ndarray
    hessian: np.ndarray

    def __post_init__(self) -> None:
        n = self.gradient.shape[-1]
        if n not in (1, 2):
            raise DimensionMismatch(f"jet dimension must be 1 or 2, got {n}")
        if self.hessian.shape[-2:] != (n, n):
            raise DimensionMismatch(
                f"hessian shape {self.hessian.shape} does not match gradient length {n}"
            )

    @property
    def dimension(self) -> int:
        return int(self.gradient.shape[-1])

    @classmethod
    def constant(cls, c: float, shape: tuple[int, ...], n: int) -> Jet2:
        return cls(
            value=np.full(shape, float(c)),
            gradient=np.zeros((*shape, n)),
            hessian=np.zeros((*shape, n, n)),
        )

    @classmethod
    def coordinate(cls, points: np.ndarray, index: int) -> Jet2:
        shape, n = points.shape[:-1], points.shape[-1]
        gradient = np.zeros((*shape, n))
        gradient[..., index] = 1.0
        return cls(
            value=np.array(points[..., index], dtype=float),
            gradient=gradient,
            hessian=np.zeros((*shape, n, n)),
        )

    def chain(self, f0: np.ndarray, f1: np.ndarray, f2: np.ndarray) -> Jet2:
        """Compose a scalar function φ with this jet, given φ, φ′, φ″ at ``value``."""
        g = self.gradient
        return Jet2(
            value=f0,
            gradient=_col(f1) * g,
            hessian=_mat(f1) * self.hessian + _mat(f2) * _outer(g, g),
        )

    def __add__(self, other: Jet2) -> Jet2:
        return Jet2(
            self.value + other.value,
            self.gradient + other.gradient,
            self.hessian + other.hessian,
        )

    def __sub__(self, other: Jet2) -> Jet2:
        return Jet2(
            self.value - other.value,
            self.gradient - other.gradient,
            self.hessian - other.hessian,
        )

    def __neg__(self) -> Jet2:
        return Jet2(-self.value, -self.gradient, -self.hessian)

    def __mul__(self, other: Jet2) -> Jet2:
        a, b = self, other
        cross = _outer(a.gradient, b.gradient)
        return Jet2(
            value=a.value * b.value,
            gradient=_col(a.value) * b.gradient + _col(b.value) * a.gradient,
            hessian=(
                _mat(a.value) * b.hessian
                + _mat(b.value) * a.hessian
                + (cross + np.swapaxes(cross, -1, -2))
            ),
        )

    def scale(self, c: float) -> Jet2:
        return Jet2(c * self.value, c * self.gradient, c * self.hessian)

    def reciprocal(self) -> Jet2:
        v = self.value
        return self.chain(1.0 / v, -1.0 / v**2, 2.0 / v**3)

    def __truediv__(self, other: Jet2) -> Jet2:
        return self * other.reciprocal()

    def at(self, index: int) -> Jet2:
        """The jet of one point out of a batch."""
        return Jet2(self.value[index], self.gradient[index], self.hessian[index])


def laplacian(j: Jet2) -> np.ndarray | float:
    """Trace of the Hessian (a float for a single point, an array for a batch)."""
    trace = np.trace(j.hessian, axis1=-2, axis2=-1)
    return float(trace) if np.ndim(trace) == 0 else trace

