"""Pointwise and aggregated identity evaluations."""

from __future__ import annotations

from enum import StrEnum

from pydantic import BaseModel


class PiconeVariant(StrEnum):
    POWER = "power"
    NONLINEAR_PRINTED = "nonlinear_printed"
    NONLINEAR_REDERIVED = "nonlinear_rederived"
    DUNNINGER_P2 = "dunninger_p2"


class PiconePointEval(BaseModel):
    """Both sides of one identity at one point, with the proof's term grouping."""

    point: list[float]
    L: float
    R: float
    residual: float
    term_I: float
    term_II: float
    term_III: float
    admissible: bool
    variant: PiconeVariant

    @property
    def scale(self) -> float:
        return max(abs(self.L), abs(self.R), 1.0)

    def csv_row(self) -> dict[str, object]:
        """Flat row; the point is split into x0[, x1]."""
        row: dict[str, object] = {f"x{i}": c for i, c in enumerate(self.point)}
        row.update(self.model_dump(mode="json", exclude={"point"}))
        return row


class PiconeSweep(BaseModel):
    """Summary of an identity over many points, normalized by scale = max(|L|, |R|, 1)."""

    variant: PiconeVariant
    u: str
    v: str
    f: str | None = None
    p: float
    point_count: int
    admissible_count: int
    max_residual: float
    min_L: float
    min_term_I: float
    min_term_II: float
    min_term_III: float
    # printed-minus-R diagnostic of the nonlinear identity (None for other variants)
    max_printed_discrepancy: float | None = None
    max_discrepancy_mismatch: float | None = None
    # Dunninger L against the power identity at p = 2
    max_power_mismatch: float | None = None


class PiconeIntegralReport(BaseModel):
    int_L: float
    int_R: float
    min_pointwise_L: float
    node_count: int


class FDReport(BaseModel):
    max_abs_gradient_err: float
    max_abs_hessian_err: float
