"""One runnable scenario per application of the identities."""

from picone_lab.experiments.hardy import run_hardy
from picone_lab.experiments.monotonicity import run_monotonicity
from picone_lab.experiments.morse import run_morse
from picone_lab.experiments.singular import run_singular_system
from picone_lab.experiments.sturm import run_sturm
from picone_lab.experiments.supersolution import operator_residual, p_biharmonic

__all__ = [
    "operator_residual",
    "p_biharmonic",
    "run_hardy",
    "run_monotonicity",
    "run_morse",
    "run_singular_system",
    "run_sturm",
]
