"""Error hierarchy. Every error knows the exit-code class the CLI maps it to."""

from __future__ import annotations

from collections.abc import Sequence

EXIT_CONFIG = 2
EXIT_ADMISSIBILITY = 3
EXIT_NUMERIC = 4


class PiconeLabError(Exception):
    """Base class for all picone-lab errors."""

    exit_code: int = EXIT_NUMERIC


# ---------------------------------------------------------------------------
# Config class
# ---------------------------------------------------------------------------


class ConfigError(PiconeLabError, ValueError):
    """Invalid run configuration. Names the offending key (and file line, if known)."""

    exit_code = EXIT_CONFIG

    def __init__(self, key: str, message: str, line: int | None = None) -> None:
        self.key = key
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"{key}{where}: {message}")


class UnknownCatalogEntry(PiconeLabError, KeyError):
    exit_code = EXIT_CONFIG

    def __init__(self, name: str) -> None:
        self.name = name
        super().__init__(f"unknown catalog entry '{name}'")

    def __str__(self) -> str:
        return self.args[0]


# ---------------------------------------------------------------------------
# Admissibility class
# ---------------------------------------------------------------------------


class AdmissibilityViolation(PiconeLabError):
    """A hypothesis of an identity fails at one or more evaluation points."""

    exit_code = EXIT_ADMISSIBILITY

    def __init__(self, message: str, points: Sequence[Sequence[float]] = ()) -> None:
        self.points = [list(map(float, pt)) for pt in points]
        super().__init__(message)


class HypothesisViolation(PiconeLabError):
    exit_code = EXIT_ADMISSIBILITY


class ResidualTooLarge(PiconeLabError):
    exit_code = EXIT_ADMISSIBILITY


class NegativeInput(PiconeLabError, ValueError):
    exit_code = EXIT_ADMISSIBILITY


# ---------------------------------------------------------------------------
# Numeric class
# ---------------------------------------------------------------------------


class DomainError(PiconeLabError, ValueError):
    """An expression subterm is undefined at an evaluation point."""

    def __init__(self, message: str, subterm: str | None = None) -> None:
        self.subterm = subterm
        if subterm is not None:
            message = f"{message} in {subterm}"
        super().__init__(message)


class DimensionMismatch(PiconeLabError, ValueError):
    pass


class SingularEvaluation(PiconeLabError):
    pass


class ZeroDenominator(PiconeLabError, ZeroDivisionError):
    pass


class NonConvergence(PiconeLabError):
    pass


class IterationFailure(PiconeLabError):
    pass


class QuadratureError(PiconeLabError):
    pass
