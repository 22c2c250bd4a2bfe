"""Value types and reports: identity evaluations, admissibility, eigenvalues, experiments."""

from picone_lab.models.evaluation import (
    FDReport,
    PiconeIntegralReport,
    PiconePointEval,
    PiconeSweep,
    PiconeVariant,
)
from picone_lab.models.fields import AdmissibilityReport, ExponentPair, Violation
from picone_lab.models.reports import (
    SCHEMA_VERSION,
    EigenReport,
    HardyReport,
    HardyRow,
    IdentityReport,
    MonotonicityReport,
    MorseReport,
    ProportionalityReport,
    QuadraticFormRow,
    ReportEnvelope,
    SturmReport,
    YoungReport,
)
from picone_lab.models.solver import EigenResult

__all__ = [
    "SCHEMA_VERSION",
    "AdmissibilityReport",
    "EigenReport",
    "EigenResult",
    "ExponentPair",
    "FDReport",
    "HardyReport",
    "HardyRow",
    "IdentityReport",
    "MonotonicityReport",
    "MorseReport",
    "PiconeIntegralReport",
    "PiconePointEval",
    "PiconeSweep",
    "PiconeVariant",
    "ProportionalityReport",
    "QuadraticFormRow",
    "ReportEnvelope",
    "SturmReport",
    "Violation",
    "YoungReport",
]
