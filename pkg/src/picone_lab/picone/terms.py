"""Shared plumbing for the identity evaluators: batched results and guards."""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from picone_lab.errors import (
    AdmissibilityViolation,
    DimensionMismatch,
    DomainError,
    SingularEvaluation,
)
from picone_lab.jets.expr import FieldExpr, as_points
from picone_lab.models.evaluation import PiconePointEval, PiconeVariant

Points = Sequence[float] | Sequence[Sequence[float]] | np.ndarray


@dataclass(frozen=True)
class PiconeBatch:
    """Both sides and the three terms of one identity over a batch of points."""

    variant: PiconeVariant
    points: np.ndarray
    L: np.ndarray
    R: np.ndarray
    term_I: np.ndarray
    term_II: np.ndarray
    term_III: np.ndarray
    admissible: np.ndarray

    @property
    def residual(self) -> np.ndarray:
        return self.L - self.R

    @property
    def scale(self) -> np.ndarray:
        return np.maximum(np.maximum(np.abs(self.L), np.abs(self.R)), 1.0)

    def __len__(self) -> int:
        return len(self.points)

    def point(self, i: int) -> PiconePointEval:
        return PiconePointEval(
            point=self.points[i].tolist(),
            L=float(self.L[i]),
            R=float(self.R[i]),
            residual=float(self.residual[i]),
            term_I=float(self.term_I[i]),
            term_II=float(self.term_II[i]),
            term_III=float(self.term_III[i]),
            admissible=bool(self.admissible[i]),
            variant=self.variant,
        )

    def evaluations(self) -> list[PiconePointEval]:
        return [self.point(i) for i in range(len(self))]


def batch_points(u: FieldExpr, v: FieldExpr, x: Points) -> np.ndarray:
    """Points as an (m, n) array; u and v must share the dimension."""
    if u.dimension != v.dimension:
        raise DimensionMismatch(f"u is {u.dimension}-D but v is {v.dimension}-D")
    return as_points(x, u.dimension).reshape(-1, u.dimension)


def require_positive(values: np.ndarray, points: np.ndarray, name: str) -> None:
    bad = ~(values > 0.0)
    if np.any(bad):
        i = int(np.flatnonzero(bad)[0])
        raise DomainError(f"{name} must be > 0, got {values[i]:.6g} at {points[i].tolist()}")


def abs_power(lap: np.ndarray, exponent: float, points: np.ndarray) -> np.ndarray:
    """``|t|^exponent``; a negative exponent at t = 0 is a singular evaluation."""
    a = np.abs(lap)
    if exponent < 0.0 and np.any(a == 0.0):
        i = int(np.flatnonzero(a == 0.0)[0])
        raise SingularEvaluation(
            f"|lap v|^{exponent:g} is singular where lap v = 0, at {points[i].tolist()}"
        )
    return a**exponent


def hypothesis_mask(u: np.ndarray, v: np.ndarray, lap_v: np.ndarray, p: float) -> np.ndarray:
    """u >= 0 (u > 0 for p < 2), v > 0 and -Δv > 0."""
    u_ok = u > 0.0 if p < 2.0 else u >= 0.0
    return u_ok & (v > 0.0) & (lap_v < 0.0)


def reject_inadmissible(mask: np.ndarray, points: np.ndarray, what: str) -> None:
    if not np.all(mask):
        bad = points[~mask]
        raise AdmissibilityViolation(
            f"{what}: hypotheses fail at {len(bad)} of {len(points)} points", bad[:100]
        )
