"""Map a RunConfig onto the library, write the report files and decide the exit status."""

from __future__ import annotations

import logging
import math
from collections.abc import Callable
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import numpy as np
from pydantic import BaseModel
from rich.console import Console

from picone_lab.config import RunConfig
from picone_lab.errors import ConfigError
from picone_lab.experiments import (
    run_hardy,
    run_monotonicity,
    run_morse,
    run_singular_system,
    run_sturm,
)
from picone_lab.export.csv import export_rows_csv
from picone_lab.export.json import envelope, export_report_json
from picone_lab.fields.catalog import resolve_field
from picone_lab.fields.nonlinearity import resolve_profile
from picone_lab.jets.expr import FieldExpr, evaluate
from picone_lab.models.evaluation import PiconeSweep
from picone_lab.models.reports import EigenReport, IdentityReport, YoungReport
from picone_lab.picone import (
    check_pair,
    dunninger_batch,
    eval_R_nonlinear,
    eval_R_power,
    nonlinear_batch,
    power_batch,
    sweep_dunninger,
    sweep_nonlinear,
    sweep_power,
    young_gap,
)
from picone_lab.quadrature.domain import Domain
from picone_lab.solver.oracle import p2_oracle
from picone_lab.solver.rayleigh import principal_eigenvalue

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1

RESIDUAL_TOL = 1e-10
NONNEGATIVE_TOL = 1e-12
EQUALITY_TOL = 1e-11
DUNNINGER_TOL = 1e-12
REDUCTION_TOL = 1e-13
DISCREPANCY_TOL = 1e-8
ORACLE_TOL = 1e-8
YOUNG_EQUALITY_TOL = 1e-14

IDENTITY_EXPONENTS = (1.5, 2.0, 2.5, 3.0, 4.0)
EQUALITY_FACTORS = (0.1, 1.0, 7.0)
YOUNG_RANDOM = 10_000
YOUNG_EQUALITY = 1_000

UNIT_INTERVAL = Domain.interval(0.0, 1.0)
RECTANGLE = Domain.rectangle(0.0, 1.0, 0.0, 2.0)

# admissible (u, v): u >= 0 (> 0 inside), v > 0 and -Δv > 0 inside
IDENTITY_CORPUS: list[tuple[Domain, list[tuple[str, str]]]] = [
    (
        UNIT_INTERVAL,
        [
            ("bubble", "sine_mode 1"),
            ("sine_mode 1", "sine_mode 1"),
            ("poly 0 1 -1", "sine_mode 1"),
            ("gauss_bump 0.25", "sine_mode 1"),
            ("sine_mode 1", "poly 0 1 -1"),
            ("bubble", "poly 0 1 -1"),
        ],
    ),
    (
        RECTANGLE,
        [
            ("bubble", "sine_mode 1"),
            ("sine_mode 1", "sine_mode 1"),
            ("gauss_bump 0.25", "sine_mode 1"),
            ("product2d bubble | sine_mode 1", "sine_mode 1"),
            ("sine_mode 1", "(* (* x0 (- 1 x0)) (* x1 (- 2 x1)))"),
        ],
    ),
]
NONLINEAR_PROFILES = ("linear", "power", "sqrt")
HARDY_CORPUS = ("bubble", "sine_mode 1", "sine_mode 2", "sine_mode 3")


@dataclass(frozen=True)
class CheckResult:
    """What one check hands back before anything is written."""

    report: BaseModel
    passed: bool
    summary: str
    rows: list[dict[str, Any]] = field(default_factory=list)


@dataclass(frozen=True)
class CheckOutcome:
    name: str
    passed: bool
    summary: str
    paths: tuple[Path, ...]


Check = Callable[[RunConfig], CheckResult]


def _field(config: RunConfig, key: str, domain: Domain | None = None) -> FieldExpr:
    descriptor = getattr(config, key)
    if descriptor is None:
        raise ConfigError(key, f"required for {config.subcommand}")
    return resolve_field(descriptor, domain or config.parsed_domain())


def _point_columns(points: np.ndarray) -> list[dict[str, Any]]:
    if points.shape[1] == 1:
        return [{"x": float(pt[0])} for pt in points]
    return [{f"x{i}": float(c) for i, c in enumerate(pt)} for pt in points]


def _sweep_rows(sweeps: list[PiconeSweep]) -> list[dict[str, Any]]:
    return [s.model_dump(mode="json") for s in sweeps]


# ---------------------------------------------------------------------------
# Identities
# ---------------------------------------------------------------------------


def _single_pair(config: RunConfig) -> CheckResult:
    domain = config.parsed_domain()
    u, v = _field(config, "u", domain), _field(config, "v", domain)
    points = domain.random_samples(config.samples, config.seed)
    p = 2.0 if config.identity == "dunninger" else float(config.p or 2.0)

    if config.identity == "power":
        sweep = sweep_power(u, v, p, points)
        batch = power_batch(u, v, check_pair(u, v, points, p), p)
        checks = {
            "residual": sweep.max_residual <= RESIDUAL_TOL,
            "nonnegative": sweep.min_L >= -NONNEGATIVE_TOL,
        }
    elif config.identity == "nonlinear":
        f = resolve_profile(config.f, p)
        sweep = sweep_nonlinear(u, v, f, p, points, config.form)
        batch = nonlinear_batch(u, v, f, check_pair(u, v, points, p), p, config.form)
        if config.form == "printed":
            checks = {"discrepancy_matches": (sweep.max_discrepancy_mismatch or 0.0) <= DISCREPANCY_TOL}
        else:
            all_admissible = sweep.admissible_count == sweep.point_count
            checks = {
                "residual": sweep.max_residual <= RESIDUAL_TOL,
                "nonnegative": not (p >= 2.0 and all_admissible) or sweep.min_L >= -NONNEGATIVE_TOL,
            }
    else:
        sweep = sweep_dunninger(u, v, points)
        batch = dunninger_batch(u, v, check_pair(u, v, points, 2.0))
        checks = {
            "residual": sweep.max_residual <= DUNNINGER_TOL,
            "matches_power": (sweep.max_power_mismatch or 0.0) <= DUNNINGER_TOL,
            "nonnegative": sweep.min_L >= -NONNEGATIVE_TOL,
        }

    passed = all(checks.values())
    report = IdentityReport(
        variant=str(sweep.variant),
        sweeps=[sweep],
        max_residual=sweep.max_residual,
        min_L=sweep.min_L,
        checks=checks,
        passed=passed,
    )
    summary = f"{sweep.variant} u={u} v={v} p={p:g}: max residual {sweep.max_residual:.2e}, min L {sweep.min_L:.2e}"
    return CheckResult(report, passed, summary, [e.csv_row() for e in batch.evaluations()])


def _corpus_pairs() -> list[tuple[Domain, FieldExpr, FieldExpr]]:
    return [
        (domain, resolve_field(u, domain), resolve_field(v, domain))
        for domain, pairs in IDENTITY_CORPUS
        for u, v in pairs
    ]


def _corpus_points(domain: Domain, config: RunConfig) -> np.ndarray:
    return domain.random_samples(config.samples, config.seed)


def _power_corpus(config: RunConfig) -> CheckResult:
    exponents = (config.p,) if config.p is not None else IDENTITY_EXPONENTS
    sweeps: list[PiconeSweep] = []
    worst_equality = 0.0
    for domain, u, v in _corpus_pairs():
        points = _corpus_points(domain, config)
        sweeps += [sweep_power(u, v, p, points) for p in exponents]
        sweeps.append(sweep_dunninger(u, v, points))
        for alpha in EQUALITY_FACTORS:
            w = (alpha * v).named(f"{alpha:g} * {v}")
            for p in exponents:
                batch = power_batch(w, v, check_pair(w, v, points, p), p)
                worst_equality = max(worst_equality, float(np.max(np.abs(batch.L) / batch.scale)))

    power = [s for s in sweeps if s.max_power_mismatch is None]
    dunninger = [s for s in sweeps if s.max_power_mismatch is not None]
    checks = {
        "residual": max(s.max_residual for s in power) <= RESIDUAL_TOL,
        "nonnegative": min(s.min_L for s in sweeps) >= -NONNEGATIVE_TOL,
        "equality": worst_equality <= EQUALITY_TOL,
        "dunninger_residual": max(s.max_residual for s in dunninger) <= DUNNINGER_TOL,
        "dunninger_matches_power": max(s.max_power_mismatch or 0.0 for s in dunninger) <= DUNNINGER_TOL,
    }
    report = IdentityReport(
        variant="power",
        sweeps=sweeps,
        max_residual=max(s.max_residual for s in sweeps),
        min_L=min(s.min_L for s in sweeps),
        checks=checks,
        passed=all(checks.values()),
    )
    summary = (
        f"{len(sweeps)} sweeps: max residual {report.max_residual:.2e}, "
        f"min L {report.min_L:.2e}, equality |L| {worst_equality:.2e}"
    )
    return CheckResult(report, report.passed, summary, _sweep_rows(sweeps))


def _nonlinear_corpus(config: RunConfig) -> CheckResult:
    exponents = (config.p,) if config.p is not None else IDENTITY_EXPONENTS
    sweeps: list[PiconeSweep] = []
    worst_reduction = 0.0
    for domain, u, v in _corpus_pairs():
        points = _corpus_points(domain, config)
        for p in exponents:
            for name in NONLINEAR_PROFILES:
                f = resolve_profile(name, p)
                sweeps.append(sweep_nonlinear(u, v, f, p, points, config.form))
            pts = check_pair(u, v, points, p)
            r_power = np.asarray(eval_R_power(u, v, pts, p))
            r_nonlinear = np.asarray(eval_R_nonlinear(u, v, resolve_profile("power", p), pts, p))
            diff = np.abs(r_nonlinear - r_power) / np.maximum(np.abs(r_power), 1.0)
            worst_reduction = max(worst_reduction, float(np.max(diff)))

    admissible = [s for s in sweeps if s.p >= 2.0 and s.admissible_count == s.point_count]
    printed_nonzero = [
        s for s in sweeps if s.p != 2.0 and (s.max_printed_discrepancy or 0.0) > DISCREPANCY_TOL
    ]
    checks = {
        "discrepancy_nonzero": bool(printed_nonzero),
        "discrepancy_matches": max(s.max_discrepancy_mismatch or 0.0 for s in sweeps) <= DISCREPANCY_TOL,
        "reduces_to_power": worst_reduction <= REDUCTION_TOL,
        "nonnegative": all(s.min_L >= -NONNEGATIVE_TOL for s in admissible),
    }
    if config.form == "rederived":
        checks["residual"] = max(s.max_residual for s in sweeps) <= RESIDUAL_TOL
    report = IdentityReport(
        variant=f"nonlinear_{config.form}",
        sweeps=sweeps,
        max_residual=max(s.max_residual for s in sweeps),
        min_L=min(s.min_L for s in sweeps),
        checks=checks,
        passed=all(checks.values()),
    )
    summary = (
        f"{len(sweeps)} sweeps ({config.form}): max residual {report.max_residual:.2e}, "
        f"reduction {worst_reduction:.2e}, {len(admissible)} admissible sweeps"
    )
    return CheckResult(report, report.passed, summary, _sweep_rows(sweeps))


def check_identity(config: RunConfig) -> CheckResult:
    if config.u is not None:
        return _single_pair(config)
    if config.identity == "nonlinear":
        return _nonlinear_corpus(config)
    return _power_corpus(config)


# ---------------------------------------------------------------------------
# Young
# ---------------------------------------------------------------------------


def check_young(config: RunConfig) -> CheckResult:
    """Random (a, b, p) for the inequality; a^p = b^q for the equality case."""
    rng = np.random.default_rng(config.seed)
    p_range = (1.01, 10.0)
    a = rng.uniform(0.0, 10.0, YOUNG_RANDOM)
    b = rng.uniform(0.0, 10.0, YOUNG_RANDOM)
    p = rng.uniform(*p_range, YOUNG_RANDOM)
    gap = np.asarray(young_gap(a, b, p)) / np.maximum(a * b, 1.0)

    ae = rng.uniform(0.0, 1.0, YOUNG_EQUALITY)
    pe = rng.uniform(p_range[0], 4.0, YOUNG_EQUALITY)
    be = ae ** (pe - 1.0)
    equality = np.abs(np.asarray(young_gap(ae, be, pe)))

    report = YoungReport(
        p_range=p_range,
        random_count=YOUNG_RANDOM,
        min_random_gap=float(np.min(gap)),
        equality_count=YOUNG_EQUALITY,
        max_equality_gap=float(np.max(equality)),
        passed=bool(np.min(gap) >= -NONNEGATIVE_TOL and np.max(equality) <= YOUNG_EQUALITY_TOL),
    )
    rows = [
        {"a": float(x), "b": float(y), "p": float(q), "gap": float(g)}
        for x, y, q, g in zip(a, b, p, gap, strict=True)
    ]
    summary = f"min gap {report.min_random_gap:.2e}, max equality gap {report.max_equality_gap:.2e}"
    return CheckResult(report, report.passed, summary, rows)


# ---------------------------------------------------------------------------
# Experiments
# ---------------------------------------------------------------------------


def check_hardy(config: RunConfig) -> CheckResult:
    if config.lambda_ is None:
        raise ConfigError("lambda", "required for hardy")
    domain = config.parsed_domain()
    corpus = [resolve_field(d, domain) for d in config.corpus or HARDY_CORPUS]
    report = run_hardy(
        _field(config, "v", domain),
        resolve_profile(config.f, config.p or 2.0),
        _field(config, "g", domain),
        config.lambda_,
        float(config.p or 2.0),
        corpus,
        domain,
        config.rule,
    )
    summary = (
        f"{len(report.rows)} corpus functions, all pass={report.all_pass}, "
        f"supersolution holds={report.supersolution_holds}"
    )
    return CheckResult(report, report.passed, summary, [r.model_dump() for r in report.rows])


def check_sturm(config: RunConfig) -> CheckResult:
    domain = config.parsed_domain()
    u, f1, f2 = (_field(config, key, domain) for key in ("u", "f1", "f2"))
    p = float(config.p or 2.0)
    report = run_sturm(u, f1, f2, p, resolve_profile(config.f, p), domain, config.rule)
    nodes, _ = config.rule.nodes_weights(domain)
    integrand = (evaluate(f1, nodes) - evaluate(f2, nodes)) * np.abs(evaluate(u, nodes)) ** p
    rows = [
        {**cols, "u": float(uu), "integrand": float(w)}
        for cols, uu, w in zip(_point_columns(nodes), evaluate(u, nodes), integrand, strict=True)
    ]
    summary = f"∫(f1-f2)|u|^p = {report.contradiction_integral:.12g} -> {report.conclusion}"
    return CheckResult(report, report.passed, summary, rows)


def check_eigen(config: RunConfig) -> CheckResult:
    domain = config.parsed_domain()
    g = _field(config, "g", domain)
    p = float(config.p or 2.0)
    result = principal_eigenvalue(
        domain, g, p, N=config.N, max_iters=config.max_iters, grad_tol=config.grad_tol
    )
    history = np.asarray(result.history)
    monotone = bool(np.all(np.diff(history) <= 1e-12 * history[:-1]))
    oracle = diff = None
    if p == 2.0:
        oracle = p2_oracle(domain, g, N=config.N)
        diff = abs(result.lambda_ - oracle.lambda_) / oracle.lambda_
    passed = (
        result.converged
        and result.positive
        and monotone
        and (diff is None or diff <= ORACLE_TOL)
    )
    report = EigenReport(
        domain=domain.describe(),
        g=str(g),
        descent=result,
        oracle=oracle,
        oracle_relative_diff=diff,
        history_monotone=monotone,
        passed=passed,
    )
    grid = result.eigenfunction
    rows = [
        {**cols, "value": float(value)}
        for cols, value in zip(_point_columns(grid.nodes()), grid.values, strict=True)
    ]
    summary = f"λ1 = {result.lambda_:.10g} after {result.iterations} iterations"
    if diff is not None:
        summary += f", oracle diff {diff:.2e}"
    return CheckResult(report, passed, summary, rows)


def check_monotonicity(config: RunConfig) -> CheckResult:
    if config.domain2 is None:
        raise ConfigError("domain2", "required for monotonicity")
    domain2 = Domain.parse(config.domain2)
    report = run_monotonicity(
        config.parsed_domain(),
        domain2,
        _field(config, "g", domain2),
        float(config.p or 2.0),
        N=config.N,
        max_iters=config.max_iters,
        grad_tol=config.grad_tol,
    )
    rows = [
        {"domain": report.domain1, "lambda": report.lambda1, "iterations": report.iterations[0]},
        {"domain": report.domain2, "lambda": report.lambda2, "iterations": report.iterations[1]},
    ]
    summary = f"λ1 = {report.lambda1:.8g} > λ2 = {report.lambda2:.8g} (gap {report.strict_gap:.6g})"
    return CheckResult(report, report.passed, summary, rows)


def check_singular(config: RunConfig) -> CheckResult:
    if config.c1 is None:
        raise ConfigError("c1", "required for singular")
    domain = config.parsed_domain()
    v = _field(config, "v", domain)
    p = float(config.p or 2.0)
    report = run_singular_system(v, config.c1, resolve_profile(config.f, p), p, domain, config.rule)
    nodes, _ = config.rule.nodes_weights(domain)
    vv = evaluate(v, nodes)
    rows = [
        {**cols, "u": float(config.c1 * value), "v": float(value)}
        for cols, value in zip(_point_columns(nodes), vv, strict=True)
    ]
    summary = f"c1 recovered {report.c1_recovered:.15g}, ∫R = {report.int_R:.2e}"
    return CheckResult(report, report.passed, summary, rows)


def check_morse(config: RunConfig) -> CheckResult:
    domain = config.parsed_domain()
    report = run_morse(
        _field(config, "a", domain), resolve_profile(config.f), domain, N=config.N, rule=config.rule
    )
    summary = f"min linearized eigenvalue {report.min_eigenvalue:.10g}, index zero={report.morse_index_zero}"
    return CheckResult(report, report.passed, summary, [r.model_dump() for r in report.quadratic_forms])


CHECKS: dict[str, Check] = {
    "verify-identity": check_identity,
    "young": check_young,
    "hardy": check_hardy,
    "sturm": check_sturm,
    "eigen": check_eigen,
    "monotonicity": check_monotonicity,
    "singular": check_singular,
    "morse": check_morse,
}


# ---------------------------------------------------------------------------
# Suite
# ---------------------------------------------------------------------------


def suite_configs(config: RunConfig) -> list[tuple[str, RunConfig]]:
    """The nine acceptance checks, sharing the solver, rule, sampling and output options."""
    shared = config.model_dump(
        include={"N", "max_iters", "grad_tol", "panels", "gauss_order", "samples", "seed", "out"}
    )
    pi4 = math.pi**4
    scenarios: list[tuple[str, dict[str, Any]]] = [
        ("identity-power", {"subcommand": "verify-identity", "identity": "power"}),
        ("identity-nonlinear", {"subcommand": "verify-identity", "identity": "nonlinear"}),
        ("young", {"subcommand": "young"}),
        (
            "hardy",
            {"subcommand": "hardy", "p": 2.0, "v": "sine_mode 1", "lambda": pi4, "g": "poly 1"},
        ),
        (
            "sturm",
            {
                "subcommand": "sturm",
                "p": 2.0,
                "u": "sine_mode 1",
                "f1": f"poly {pi4!r}",
                "f2": f"poly {pi4 + 1.0!r}",
            },
        ),
        ("eigen", {"subcommand": "eigen", "p": 2.0}),
        ("monotonicity", {"subcommand": "monotonicity", "p": 2.0, "domain2": "interval 0 2"}),
        ("singular", {"subcommand": "singular", "p": 2.0, "v": "sine_mode 1", "c1": pi4**-1}),
        ("morse", {"subcommand": "morse", "a": "poly 1", "f": "linear"}),
    ]
    return [(name, RunConfig.model_validate({**shared, **extra})) for name, extra in scenarios]


def _write(name: str, config: RunConfig, result: CheckResult) -> tuple[Path, ...]:
    env = envelope(name, result.report, result.passed, config.echo())
    return (
        export_report_json(env, config.out),
        export_rows_csv(name, result.rows, config.out),
    )


def run_checks(config: RunConfig) -> list[CheckOutcome]:
    """Run every check the config names and write ``<name>.report.json`` and ``<name>.data.csv``."""
    if config.subcommand == "suite":
        plan = suite_configs(config)
    else:
        plan = [(config.subcommand, config)]

    outcomes = []
    for name, sub in plan:
        logger.info("running %s", name)
        result = CHECKS[sub.subcommand](sub)
        outcomes.append(CheckOutcome(name, result.passed, result.summary, _write(name, sub, result)))
    return outcomes


def execute(config: RunConfig, console: Console | None = None) -> int:
    """Run, print one line per check, and return 0 iff every check passed."""
    console = console or Console()
    outcomes = run_checks(config)
    for outcome in outcomes:
        mark = "[green]PASS[/green]" if outcome.passed else "[red]FAIL[/red]"
        console.print(f"{mark} {outcome.name}: {outcome.summary}")
    failed = [o.name for o in outcomes if not o.passed]
    if failed:
        console.print(f"[red]{len(failed)} of {len(outcomes)} checks failed: {', '.join(failed)}[/red]")
        return EXIT_FAILED
    console.print(f"[dim]{len(outcomes)} report(s) written to {config.out}[/dim]")
    return EXIT_OK


__all__ = [
    "CHECKS",
    "CheckOutcome",
    "CheckResult",
    "execute",
    "run_checks",
    "suite_configs",
]
