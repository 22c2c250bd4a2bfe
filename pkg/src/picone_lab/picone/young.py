"""Young's inequality ab <= a^p/p + b^q/q, equality iff a^p = b^q."""

from __future__ import annotations

import numpy as np

from picone_lab.errors import ConfigError, NegativeInput
from picone_lab.models.fields import ExponentPair


def young_gap(
    a: float | np.ndarray, b: float | np.ndarray, p: float | np.ndarray | ExponentPair
) -> float | np.ndarray:
    """``a^p/p + b^q/q - ab`` for a, b >= 0; broadcasts over arrays."""
    aa, bb = np.asarray(a, dtype=float), np.asarray(b, dtype=float)
    if np.any(aa < 0.0) or np.any(bb < 0.0):
        raise NegativeInput("young_gap needs a >= 0 and b >= 0")
    if isinstance(p, ExponentPair):
        pp = np.asarray(p.p)
    else:
        pp = np.asarray(p, dtype=float)
        if np.any(pp <= 1.0):
            raise ConfigError("p", "young_gap needs p > 1")
    qq = pp / (pp - 1.0)
    gap = aa**pp / pp + bb**qq / qq - aa * bb
    return float(gap) if gap.ndim == 0 else gap


def young_equality_partner(a: float | np.ndarray, p: float | ExponentPair) -> float | np.ndarray:
    """The b with a^p = b^q, i.e. b = a^(p-1)."""
    pe = ExponentPair.of(p).p
    b = np.asarray(a, dtype=float) ** (pe - 1.0)
    return float(b) if b.ndim == 0 else b
