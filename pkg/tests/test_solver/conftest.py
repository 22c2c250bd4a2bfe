"""Shared closed forms for the solver tests."""

from __future__ import annotations

import math
from collections.abc import Callable

import pytest


def _discrete_eigenvalue(N: int, *lengths: float) -> float:
    mu = 0.0
    for length in lengths:
        h = length / (N + 1)
        mu += 4.0 / h**2 * math.sin(math.pi * h / (2.0 * length)) ** 2
    return mu**2


@pytest.fixture
def discrete_eigenvalue() -> Callable[..., float]:
    """(A·A) eigenvalue of the first sine mode for the Dirichlet stencil with N nodes per axis."""
    return _discrete_eigenvalue
