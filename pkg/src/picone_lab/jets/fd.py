"""Central finite differences as an independent oracle for jets."""

from __future__ import annotations

import itertools
from collections.abc import Sequence

import numpy as np

from picone_lab.jets.expr import FieldExpr, as_points, eval_jet, evaluate
from picone_lab.models.evaluation import FDReport


def fd_crosscheck(expr: FieldExpr, x: Sequence[float] | np.ndarray, h: float) -> FDReport:
    """Compare the exact jet at ``x`` with central differences of step ``h``."""
    if not h > 0.0:
        raise ValueError(f"step h must be positive, got {h}")
    n = expr.dimension
    x0 = as_points(x, n).reshape(n)

    # All offsets in {-1, 0, 1}^n cover the 3-point and the 4-point cross stencils.
    keys = list(itertools.product((-1, 0, 1), repeat=n))
    values = evaluate(expr, x0 + h * np.array(keys, dtype=float))
    f = dict(zip(keys, values.tolist(), strict=True))

    def at(**steps: int) -> float:
        return f[tuple(steps.get(f"x{k}", 0) for k in range(n))]

    names = [f"x{k}" for k in range(n)]
    centre = at()
    grad = np.array([(at(**{a: 1}) - at(**{a: -1})) / (2 * h) for a in names])
    hess = np.empty((n, n))
    for i, a in enumerate(names):
        hess[i, i] = (at(**{a: 1}) - 2 * centre + at(**{a: -1})) / h**2
        for j in range(i + 1, n):
            b = names[j]
            hess[i, j] = hess[j, i] = (
                at(**{a: 1, b: 1}) - at(**{a: 1, b: -1}) - at(**{a: -1, b: 1}) + at(**{a: -1, b: -1})
            ) / (4 * h**2)

    jet = eval_jet(expr, x0)
    return FDReport(
        max_abs_gradient_err=float(np.max(np.abs(jet.gradient - grad))),
        max_abs_hessian_err=float(np.max(np.abs(jet.hessian - hess))),
    )
