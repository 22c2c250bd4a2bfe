"""Intervals and rectangles, with the sample sets drawn on them."""

from __future__ import annotations

from typing import Literal

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from picone_lab.errors import ConfigError


class Domain(BaseModel):
    """An open interval (a, b) or rectangle (a1, b1) x (a2, b2)."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["interval", "rectangle"]
    bounds: tuple[float, ...]

    @model_validator(mode="after")
    def _check_bounds(self) -> Domain:
        expected = 2 if self.kind == "interval" else 4
        if len(self.bounds) != expected:
            raise ValueError(f"{self.kind} needs {expected} bounds, got {len(self.bounds)}")
        for a, b in zip(self.bounds[::2], self.bounds[1::2], strict=True):
            if not a < b:
                raise ValueError(f"empty axis: {a} >= {b}")
        return self

    @classmethod
    def interval(cls, a: float, b: float) -> Domain:
        return cls(kind="interval", bounds=(float(a), float(b)))

    @classmethod
    def rectangle(cls, a1: float, b1: float, a2: float, b2: float) -> Domain:
        return cls(kind="rectangle", bounds=(float(a1), float(b1), float(a2), float(b2)))

    @classmethod
    def parse(cls, text: str) -> Domain:
        """Parse ``"interval 0 1"`` or ``"rectangle 0 1 0 2"``."""
        try:
            kind, *rest = text.split()
            bounds = tuple(float(t) for t in rest)
            return cls(kind=kind, bounds=bounds)  # type: ignore[arg-type]
        except ValueError as e:
            raise ConfigError("domain", f"cannot parse domain '{text}': {e}") from e

    def describe(self) -> str:
        return " ".join([self.kind, *(f"{b:g}" for b in self.bounds)])

    @property
    def dimension(self) -> int:
        return len(self.bounds) // 2

    @property
    def lower(self) -> np.ndarray:
        return np.array(self.bounds[::2])

    @property
    def upper(self) -> np.ndarray:
        return np.array(self.bounds[1::2])

    @property
    def lengths(self) -> np.ndarray:
        return self.upper - self.lower

    @property
    def measure(self) -> float:
        return float(np.prod(self.lengths))

    @property
    def center(self) -> np.ndarray:
        return (self.lower + self.upper) / 2

    def strictly_contains(self, other: Domain) -> bool:
        """``other ⊂ self`` and ``other ≠ self``."""
        if other.dimension != self.dimension:
            return False
        inside = np.all(self.lower <= other.lower) and np.all(other.upper <= self.upper)
        return bool(inside) and other.bounds != self.bounds

    def _tensor(self, axes: list[np.ndarray]) -> np.ndarray:
        if self.dimension == 1:
            return axes[0][:, None]
        g0, g1 = np.meshgrid(axes[0], axes[1], indexing="ij")
        return np.column_stack([g0.ravel(), g1.ravel()])

    def interior_samples(self, count: int) -> np.ndarray:
        """Cell-centred quasi-uniform samples: ``count`` per axis, shape (count**n, n)."""
        axes = [
            lo + (np.arange(count) + 0.5) * (hi - lo) / count
            for lo, hi in zip(self.lower, self.upper, strict=True)
        ]
        return self._tensor(axes)

    def random_samples(self, count: int, seed: int, margin: float = 0.02) -> np.ndarray:
        """``count`` uniform points kept ``margin`` (relative) away from the boundary."""
        rng = np.random.default_rng(seed)
        lo = self.lower + margin * self.lengths
        hi = self.upper - margin * self.lengths
        return lo + (hi - lo) * rng.random((count, self.dimension))

    def boundary_points(self, count: int = 16) -> tuple[np.ndarray, np.ndarray]:
        """Boundary points and the outward unit normals there."""
        if self.dimension == 1:
            return np.array([[self.bounds[0]], [self.bounds[1]]]), np.array([[-1.0], [1.0]])
        a1, b1, a2, b2 = self.bounds
        t = (np.arange(count) + 0.5) / count
        xs, ys = a1 + t * (b1 - a1), a2 + t * (b2 - a2)
        points = np.concatenate(
            [
                np.column_stack([xs, np.full(count, a2)]),
                np.column_stack([xs, np.full(count, b2)]),
                np.column_stack([np.full(count, a1), ys]),
                np.column_stack([np.full(count, b1), ys]),
            ]
        )
        normals = np.repeat(np.array([[0.0, -1.0], [0.0, 1.0], [-1.0, 0.0], [1.0, 0.0]]), count, axis=0)
        return points, normals
