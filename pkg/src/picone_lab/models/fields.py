"""Foundation value types: conjugate exponents and admissibility reports."""

from __future__ import annotations

from pydantic import BaseModel, ConfigDict, computed_field, field_validator


class ExponentPair(BaseModel):
    """Conjugate exponents p > 1 and q = p / (p - 1)."""

    model_config = ConfigDict(frozen=True)

    p: float

    @field_validator("p")
    @classmethod
    def _p_above_one(cls, p: float) -> float:
        if not p > 1.0:
            raise ValueError(f"p must be > 1, got {p}")
        if p == float("inf"):
            raise ValueError("p must be finite")
        return p

    @computed_field  # type: ignore[prop-decorator]
    @property
    def q(self) -> float:
        return self.p / (self.p - 1.0)

    @classmethod
    def of(cls, p: float | ExponentPair) -> ExponentPair:
        return p if isinstance(p, ExponentPair) else cls(p=p)


class Violation(BaseModel):
    """One sample point where a hypothesis fails."""

    point: list[float]
    condition: str  # "u >= 0", "u > 0", "v > 0", "-lap v > 0", "f(v) > 0", "C1", "C2"
    value: float


class AdmissibilityReport(BaseModel):
    """Extrema of every hypothesis quantity over a sample set, plus the violations.

    ``violations`` holds at most ``max_listed`` entries; ``violation_count`` is the
    full count. The nonlinearity fields are ``None`` when no profile was checked.
    """

    sample_count: int
    min_u: float
    min_v: float
    max_lap_v: float
    min_f: float | None = None
    min_C1_gap: float | None = None
    max_f2: float | None = None
    strict_u_positive: bool = False
    violation_count: int = 0
    violations: list[Violation] = []

    @property
    def ok(self) -> bool:
        return self.violation_count == 0
