"""Experiment reports and the versioned envelope they are written in.

Every ``passed`` flag is a function of the report's own numeric fields.
"""

from __future__ import annotations

from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field

from picone_lab.models.evaluation import PiconeSweep
from picone_lab.models.solver import EigenResult

SCHEMA_VERSION = 1


class HardyRow(BaseModel):
    """One corpus function: lhs = ∫|Δu|^p, rhs = λ∫g|u|^p."""

    u: str
    lhs: float
    rhs: float
    margin: float
    ratio: float  # lhs / ∫g|u|^p
    passed: bool  # margin >= -1e-9 * max(lhs, 1)


class HardyReport(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    lambda_: float = Field(alias="lambda")
    p: float
    g: str
    v: str
    f: str
    rows: list[HardyRow]
    all_pass: bool
    supersolution_residual_min: float
    supersolution_holds: bool
    # "jets" (exact, p = 2) or "finite-difference"
    supersolution_method: str
    passed: bool  # all_pass, or no claim because the supersolution hypothesis fails


class SturmReport(BaseModel):
    u: str
    f1: str
    f2: str
    f: str
    p: float
    equation_residual: float
    contradiction_integral: float
    candidates: list[str]
    pointwise_R_min: float
    conclusion: Literal["no_positive_v_possible", "inconclusive"]
    passed: bool


class MonotonicityReport(BaseModel):
    domain1: str
    domain2: str
    g: str
    p: float
    N: int
    lambda1: float
    lambda2: float
    strict_gap: float
    tolerance: float
    iterations: tuple[int, int]
    passed: bool


class ProportionalityReport(BaseModel):
    v: str
    f: str
    p: float
    c1: float
    c1_recovered: float
    relative_deviation: float
    residual_first: float
    residual_second: float
    int_R: float
    passed: bool


class QuadraticFormRow(BaseModel):
    """∫|Δw|^2 against ∫a f'(0) w^2 for one test function w."""

    w: str
    energy: float
    weighted: float
    margin: float
    passed: bool


class MorseReport(BaseModel):
    a: str
    f: str
    N: int
    f_at_zero: float
    fprime_at_zero: float
    a_positive: bool
    f_zero_ok: bool
    fprime_ok: bool
    # f'(s) >= 1 on sampled s in (0, 10]; recorded, not enforced
    fprime_lower_ok: bool
    min_eigenvalue: float
    morse_index_zero: bool
    quadratic_forms: list[QuadraticFormRow]
    passed: bool


class YoungReport(BaseModel):
    p_range: tuple[float, float]
    random_count: int
    min_random_gap: float
    equality_count: int
    max_equality_gap: float
    passed: bool


class EigenReport(BaseModel):
    """Descent result, and at p = 2 the linear-algebra oracle on the same grid."""

    domain: str
    g: str
    descent: EigenResult
    oracle: EigenResult | None = None
    oracle_relative_diff: float | None = None
    history_monotone: bool
    passed: bool


class IdentityReport(BaseModel):
    """A set of identity sweeps with the worst normalized values across them."""

    variant: str
    sweeps: list[PiconeSweep]
    max_residual: float
    min_L: float
    checks: dict[str, bool]
    passed: bool


class ReportEnvelope(BaseModel):
    """What lands in ``<name>.report.json``."""

    schema_version: int = Field(default=SCHEMA_VERSION, alias="schema")
    name: str
    passed: bool
    config: dict[str, Any]
    report: dict[str, Any]

    model_config = ConfigDict(populate_by_name=True)
