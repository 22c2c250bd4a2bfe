"""Morse index of the trivial solution of Δ²u = a(x) f(u) under Navier conditions (p = 2).

With a > 0, f(0) = 0 and f'(0) <= 1 the linearization Δ²w - a f'(0) w = λw has
no negative eigenvalue. The run computes the smallest discrete eigenvalue and
checks ∫|Δw|² >= ∫a f'(0) w² on a fixed set of boundary-vanishing w.
"""

from __future__ import annotations

import logging

import numpy as np

from picone_lab.errors import HypothesisViolation
from picone_lab.fields.catalog import catalog
from picone_lab.fields.nonlinearity import NonlinearityProfile
from picone_lab.jets.expr import FieldExpr, eval_jet, evaluate
from picone_lab.jets.jet import laplacian
from picone_lab.models.reports import MorseReport, QuadraticFormRow
from picone_lab.quadrature.domain import Domain
from picone_lab.quadrature.rules import QuadratureRule, integrate
from picone_lab.solver.grid import sample
from picone_lab.solver.oracle import linearized_min_eigenvalue

logger = logging.getLogger(__name__)

F_ZERO_TOL = 1e-14
INDEX_TOL = 1e-9
FORM_TOL = 1e-9
FPRIME_SAMPLES = np.linspace(0.0, 10.0, 201)[1:]


def quadratic_form_corpus(domain: Domain) -> list[FieldExpr]:
    return [
        catalog("sine_mode", [1.0], domain),
        catalog("sine_mode", [2.0], domain),
        catalog("sine_mode", [3.0], domain),
        catalog("bubble", [], domain),
        catalog("sine_mode", [1.0], domain) * catalog("bubble", [], domain),
    ]


def quadratic_form_row(
    w: FieldExpr, a: FieldExpr, fprime0: float, domain: Domain, rule: QuadratureRule
) -> QuadraticFormRow:
    energy = integrate(lambda x: np.asarray(laplacian(eval_jet(w, x))) ** 2, domain, rule)
    weighted = integrate(lambda x: evaluate(a, x) * fprime0 * evaluate(w, x) ** 2, domain, rule)
    margin = energy - weighted
    return QuadraticFormRow(
        w=str(w),
        energy=energy,
        weighted=weighted,
        margin=margin,
        passed=margin >= -FORM_TOL * max(energy, 1.0),
    )


def run_morse(
    a: FieldExpr,
    f: NonlinearityProfile,
    domain: Domain,
    N: int = 399,
    rule: QuadratureRule | None = None,
) -> MorseReport:
    rule = rule or QuadratureRule()
    f0, f1, _ = (float(x) for x in f.derivatives(0.0))

    a_nodes = sample(a, domain, N).values
    if not np.all(a_nodes > 0.0):
        raise HypothesisViolation(f"a={a} must be > 0 (min {a_nodes.min():.6g})")
    if abs(f0) > F_ZERO_TOL:
        raise HypothesisViolation(f"f(0) must be 0, got {f0:.6g} for f={f.label}")
    if f1 > 1.0:
        raise HypothesisViolation(f"f'(0) must be <= 1, got {f1:.6g} for f={f.label}")

    fprime_lower_ok = bool(np.all(f.derivatives(FPRIME_SAMPLES)[1] >= 1.0))
    min_eig = linearized_min_eigenvalue(a, f1, domain, N)
    rows = [quadratic_form_row(w, a, f1, domain, rule) for w in quadratic_form_corpus(domain)]
    index_zero = min_eig >= -INDEX_TOL
    logger.info("morse: f'(0)=%g, min eigenvalue %.10g, index zero=%s", f1, min_eig, index_zero)
    return MorseReport(
        a=str(a),
        f=f.label,
        N=N,
        f_at_zero=f0,
        fprime_at_zero=f1,
        a_positive=True,
        f_zero_ok=True,
        fprime_ok=True,
        fprime_lower_ok=fprime_lower_ok,
        min_eigenvalue=min_eig,
        morse_index_zero=index_zero,
        quadratic_forms=rows,
        passed=index_zero and all(r.passed for r in rows),
    )
