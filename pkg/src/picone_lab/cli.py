"""CLI entry point for picone-lab."""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Any

import typer
from rich.console import Console
from rich.logging import RichHandler
from rich.markup import escape

from picone_lab.errors import PiconeLabError

app = typer.Typer(
    name="picone-lab",
    help="Numerically verify Picone identities for the p-biharmonic operator and run their applications.",
    no_args_is_help=True,
)
console = Console()
err_console = Console(stderr=True)

CONFIG_HELP = "YAML config file; flags override its keys"
DOMAIN_HELP = "'interval a b' or 'rectangle a1 b1 a2 b2'"
FIELD_HELP = "Catalog descriptor ('sine_mode 1', 'bubble', ...) or s-expression"


def _setup_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.INFO,
        format="%(message)s",
        handlers=[RichHandler(console=err_console, show_path=False, show_time=False)],
        force=True,
    )


def _run(subcommand: str, config_path: Path | None, flags: dict[str, Any]) -> None:
    """Parse, execute and turn the outcome into the process exit code."""
    from picone_lab.config import parse_config
    from picone_lab.runner import execute

    _setup_logging(bool(flags.get("verbose")))
    try:
        config = parse_config(subcommand, flags, config_path)
        status = execute(config, console)
    except PiconeLabError as e:
        console.print(f"[red]{type(e).__name__}: {escape(str(e))}[/red]")
        raise typer.Exit(e.exit_code) from e
    raise typer.Exit(status)


@app.command("verify-identity")
def verify_identity(
    config: Path | None = typer.Option(None, "--config", help=CONFIG_HELP),
    identity: str | None = typer.Option(
        None, "--identity", "--lemma", help="power, nonlinear or dunninger"
    ),
    form: str | None = typer.Option(None, help="Nonlinear identity form: printed or rederived"),
    p: float | None = typer.Option(None, "--p", help="Exponent p > 1 (omit with no --u/--v to sweep the corpus)"),
    u: str | None = typer.Option(None, "--u", help=FIELD_HELP),
    v: str | None = typer.Option(None, "--v", help=FIELD_HELP),
    f: str | None = typer.Option(None, "--f", help="Nonlinearity profile or s-expression in y"),
    domain: str | None = typer.Option(None, help=DOMAIN_HELP),
    samples: int | None = typer.Option(None, help="Random interior sample points per pair"),
    seed: int | None = typer.Option(None, help="Sampling seed"),
    out: Path | None = typer.Option(None, help="Report directory (default $PICONE_LAB_OUT or ./reports)"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging"),
) -> None:
    """Check L = R and L >= 0 for one (u, v) pair, or the built-in corpus when --u/--v are omitted."""
    _run(
        "verify-identity",
        config,
        {
            "identity": identity, "form": form, "p": p, "u": u, "v": v, "f": f,
            "domain": domain, "samples": samples, "seed": seed, "out": out, "verbose": verbose or None,
        },
    )


@app.command()
def young(
    config: Path | None = typer.Option(None, "--config", help=CONFIG_HELP),
    seed: int | None = typer.Option(None, help="Sampling seed"),
    out: Path | None = typer.Option(None, help="Report directory"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging"),
) -> None:
    """Young's inequality on random (a, b, p) and on its equality cases."""
    _run("young", config, {"seed": seed, "out": out, "verbose": verbose or None})


@app.command()
def hardy(
    config: Path | None = typer.Option(None, "--config", help=CONFIG_HELP),
    p: float | None = typer.Option(None, "--p", help="Exponent p > 1"),
    v: str | None = typer.Option(None, "--v", help="Positive supersolution"),
    f: str | None = typer.Option(None, "--f", help="Nonlinearity profile"),
    g: str | None = typer.Option(None, "--g", help="Positive weight"),
    lam: float | None = typer.Option(None, "--lambda", help="λ in ∫|Δu|^p >= λ∫g|u|^p"),
    corpus: list[str] | None = typer.Option(None, help="Corpus function (repeatable)"),
    domain: str | None = typer.Option(None, help=DOMAIN_HELP),
    panels: int | None = typer.Option(None, help="Quadrature panels per axis"),
    gauss_order: int | None = typer.Option(None, help="Gauss-Legendre nodes per panel"),
    out: Path | None = typer.Option(None, help="Report directory"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging"),
) -> None:
    """Hardy-type inequality from a positive supersolution."""
    _run(
        "hardy",
        config,
        {
            "p": p, "v": v, "f": f, "g": g, "lambda": lam, "corpus": corpus or None,
            "domain": domain, "panels": panels, "gauss_order": gauss_order,
            "out": out, "verbose": verbose or None,
        },
    )


@app.command()
def sturm(
    config: Path | None = typer.Option(None, "--config", help=CONFIG_HELP),
    p: float | None = typer.Option(None, "--p", help="Exponent p > 1"),
    u: str | None = typer.Option(None, "--u", help="Positive solution of the first equation"),
    f1: str | None = typer.Option(None, "--f1", help="Coefficient of the first equation"),
    f2: str | None = typer.Option(None, "--f2", help="Larger coefficient of the second equation"),
    f: str | None = typer.Option(None, "--f", help="Nonlinearity profile"),
    domain: str | None = typer.Option(None, help=DOMAIN_HELP),
    panels: int | None = typer.Option(None, help="Quadrature panels per axis"),
    gauss_order: int | None = typer.Option(None, help="Gauss-Legendre nodes per panel"),
    out: Path | None = typer.Option(None, help="Report directory"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging"),
) -> None:
    """Sturmian comparison: no positive solution of the second problem."""
    _run(
        "sturm",
        config,
        {
            "p": p, "u": u, "f1": f1, "f2": f2, "f": f, "domain": domain,
            "panels": panels, "gauss_order": gauss_order, "out": out, "verbose": verbose or None,
        },
    )


@app.command()
def eigen(
    config: Path | None = typer.Option(None, "--config", help=CONFIG_HELP),
    p: float | None = typer.Option(None, "--p", help="Exponent p > 1"),
    g: str | None = typer.Option(None, "--g", help="Positive weight"),
    domain: str | None = typer.Option(None, help=DOMAIN_HELP),
    n: int | None = typer.Option(None, "--N", help="Interior nodes per axis"),
    max_iters: int | None = typer.Option(None, help="Descent iteration cap"),
    grad_tol: float | None = typer.Option(None, help="Relative residual stopping tolerance"),
    out: Path | None = typer.Option(None, help="Report directory"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging"),
) -> None:
    """Principal eigenvalue by Rayleigh-quotient descent (with the linear oracle at p = 2)."""
    _run(
        "eigen",
        config,
        {
            "p": p, "g": g, "domain": domain, "N": n, "max_iters": max_iters,
            "grad_tol": grad_tol, "out": out, "verbose": verbose or None,
        },
    )


@app.command()
def monotonicity(
    config: Path | None = typer.Option(None, "--config", help=CONFIG_HELP),
    p: float | None = typer.Option(None, "--p", help="Exponent p > 1"),
    g: str | None = typer.Option(None, "--g", help="Positive weight"),
    domain: str | None = typer.Option(None, help="Inner domain"),
    domain2: str | None = typer.Option(None, help="Outer domain, strictly containing the inner one"),
    n: int | None = typer.Option(None, "--N", help="Interior nodes per axis"),
    max_iters: int | None = typer.Option(None, help="Descent iteration cap"),
    grad_tol: float | None = typer.Option(None, help="Relative residual stopping tolerance"),
    out: Path | None = typer.Option(None, help="Report directory"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging"),
) -> None:
    """Strict decrease of the principal eigenvalue under domain inclusion."""
    _run(
        "monotonicity",
        config,
        {
            "p": p, "g": g, "domain": domain, "domain2": domain2, "N": n,
            "max_iters": max_iters, "grad_tol": grad_tol, "out": out, "verbose": verbose or None,
        },
    )


@app.command()
def singular(
    config: Path | None = typer.Option(None, "--config", help=CONFIG_HELP),
    p: float | None = typer.Option(None, "--p", help="Exponent p > 1"),
    v: str | None = typer.Option(None, "--v", help="Second component"),
    c1: float | None = typer.Option(None, "--c1", help="Proportionality constant, u = c1·v"),
    f: str | None = typer.Option(None, "--f", help="Nonlinearity profile"),
    domain: str | None = typer.Option(None, help=DOMAIN_HELP),
    panels: int | None = typer.Option(None, help="Quadrature panels per axis"),
    gauss_order: int | None = typer.Option(None, help="Gauss-Legendre nodes per panel"),
    out: Path | None = typer.Option(None, help="Report directory"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging"),
) -> None:
    """Proportionality of positive solutions of the singular system."""
    _run(
        "singular",
        config,
        {
            "p": p, "v": v, "c1": c1, "f": f, "domain": domain, "panels": panels,
            "gauss_order": gauss_order, "out": out, "verbose": verbose or None,
        },
    )


@app.command()
def morse(
    config: Path | None = typer.Option(None, "--config", help=CONFIG_HELP),
    a: str | None = typer.Option(None, "--a", help="Positive coefficient"),
    f: str | None = typer.Option(None, "--f", help="Nonlinearity with f(0) = 0"),
    domain: str | None = typer.Option(None, help=DOMAIN_HELP),
    n: int | None = typer.Option(None, "--N", help="Interior nodes per axis"),
    out: Path | None = typer.Option(None, help="Report directory"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging"),
) -> None:
    """Morse index of the trivial solution (p = 2)."""
    _run(
        "morse",
        config,
        {"a": a, "f": f, "domain": domain, "N": n, "out": out, "verbose": verbose or None},
    )


@app.command()
def suite(
    config: Path | None = typer.Option(None, "--config", help=CONFIG_HELP),
    n: int | None = typer.Option(None, "--N", help="Interior nodes per axis"),
    max_iters: int | None = typer.Option(None, help="Descent iteration cap"),
    grad_tol: float | None = typer.Option(None, help="Relative residual stopping tolerance"),
    panels: int | None = typer.Option(None, help="Quadrature panels per axis"),
    gauss_order: int | None = typer.Option(None, help="Gauss-Legendre nodes per panel"),
    samples: int | None = typer.Option(None, help="Random interior sample points per pair"),
    seed: int | None = typer.Option(None, help="Sampling seed"),
    out: Path | None = typer.Option(None, help="Report directory"),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging"),
) -> None:
    """Run all nine acceptance checks and write one report pair per check."""
    _run(
        "suite",
        config,
        {
            "N": n, "max_iters": max_iters, "grad_tol": grad_tol, "panels": panels,
            "gauss_order": gauss_order, "samples": samples, "seed": seed,
            "out": out, "verbose": verbose or None,
        },
    )
