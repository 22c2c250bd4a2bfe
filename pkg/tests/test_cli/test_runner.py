"""Tests for the check runner: report files, pass flags and the identity corpus."""

import csv
import json
import math
from pathlib import Path

import pytest
from rich.console import Console

from picone_lab.config import parse_config
from picone_lab.errors import AdmissibilityViolation, ConfigError
from picone_lab.runner import CHECKS, execute, run_checks

PI4 = math.pi**4


def _report(path: Path, name: str) -> dict:
    return json.loads((path / f"{name}.report.json").read_text())


class TestVerifyIdentity:
    def test_single_power_pair(self, tmp_path: Path) -> None:
        config = parse_config(
            "verify-identity",
            {"p": 3.0, "u": "bubble", "v": "sine_mode 1", "samples": 40, "out": tmp_path},
        )
        (outcome,) = run_checks(config)
        assert outcome.passed
        assert outcome.paths == (
            tmp_path / "verify-identity.report.json",
            tmp_path / "verify-identity.data.csv",
        )
        data = _report(tmp_path, "verify-identity")
        assert data["report"]["checks"] == {"residual": True, "nonnegative": True}
        assert data["config"]["u"] == "bubble"
        with (tmp_path / "verify-identity.data.csv").open() as fh:
            rows = list(csv.DictReader(fh))
        assert len(rows) == 40
        assert {"x0", "L", "R", "residual", "admissible"} <= set(rows[0])

    def test_printed_form_checks_the_discrepancy(self, tmp_path: Path) -> None:
        config = parse_config(
            "verify-identity",
            {
                "identity": "nonlinear",
                "form": "printed",
                "p": 3.0,
                "u": "bubble",
                "v": "sine_mode 1",
                "samples": 40,
                "out": tmp_path,
            },
        )
        result = CHECKS["verify-identity"](config)
        assert result.passed
        assert set(result.report.checks) == {"discrepancy_matches"}

    def test_dunninger_pair(self, tmp_path: Path) -> None:
        config = parse_config(
            "verify-identity",
            {"identity": "dunninger", "u": "bubble", "v": "sine_mode 1", "p": 2.0, "samples": 40, "out": tmp_path},
        )
        result = CHECKS["verify-identity"](config)
        assert result.passed
        assert result.report.variant == "dunninger_p2"

    def test_inadmissible_pair(self, tmp_path: Path) -> None:
        config = parse_config(
            "verify-identity",
            {"p": 2.0, "u": "bubble", "v": "sine_mode 2", "samples": 40, "out": tmp_path},
        )
        with pytest.raises(AdmissibilityViolation):
            run_checks(config)

    def test_power_corpus(self, tmp_path: Path) -> None:
        config = parse_config("verify-identity", {"p": 3.0, "samples": 25, "out": tmp_path})
        result = CHECKS["verify-identity"](config)
        assert result.passed, result.report.checks
        # one power and one Dunninger sweep per corpus pair
        assert len(result.report.sweeps) == 2 * 11

    def test_nonlinear_corpus(self, tmp_path: Path) -> None:
        config = parse_config(
            "verify-identity", {"identity": "nonlinear", "p": 3.0, "samples": 25, "out": tmp_path}
        )
        result = CHECKS["verify-identity"](config)
        assert result.passed, result.report.checks
        assert result.report.checks["discrepancy_nonzero"]
        assert len(result.report.sweeps) == 3 * 11


def test_young(tmp_path: Path) -> None:
    result = CHECKS["young"](parse_config("young", {"out": tmp_path}))
    assert result.passed
    assert result.report.random_count == 10_000
    assert result.report.max_equality_gap <= 1e-14


class TestExperiments:
    def test_hardy(self, tmp_path: Path) -> None:
        config = parse_config(
            "hardy", {"p": 2.0, "v": "sine_mode 1", "lambda": PI4, "out": tmp_path}
        )
        result = CHECKS["hardy"](config)
        assert result.passed
        assert [row["u"] for row in result.rows] == ["bubble", "sine_mode 1", "sine_mode 2", "sine_mode 3"]

    def test_hardy_needs_lambda(self, tmp_path: Path) -> None:
        config = parse_config("hardy", {"p": 2.0, "v": "sine_mode 1", "out": tmp_path})
        with pytest.raises(ConfigError) as exc:
            CHECKS["hardy"](config)
        assert exc.value.key == "lambda"

    def test_sturm(self, tmp_path: Path) -> None:
        config = parse_config(
            "sturm",
            {"p": 2.0, "u": "sine_mode 1", "f1": f"poly {PI4!r}", "f2": f"poly {PI4 + 1.0!r}", "out": tmp_path},
        )
        result = CHECKS["sturm"](config)
        assert result.passed
        assert set(result.rows[0]) == {"x", "u", "integrand"}

    def test_eigen(self, tmp_path: Path) -> None:
        config = parse_config("eigen", {"p": 2.0, "N": 49, "out": tmp_path})
        result = CHECKS["eigen"](config)
        assert result.passed
        assert result.report.oracle_relative_diff <= 1e-8
        assert len(result.rows) == 49

    def test_eigen_unconverged_fails(self, tmp_path: Path) -> None:
        config = parse_config("eigen", {"p": 3.0, "N": 49, "max_iters": 1, "out": tmp_path})
        result = CHECKS["eigen"](config)
        assert not result.passed
        assert result.report.oracle is None

    def test_monotonicity(self, tmp_path: Path) -> None:
        config = parse_config(
            "monotonicity", {"p": 2.0, "N": 49, "domain2": "interval 0 2", "out": tmp_path}
        )
        assert CHECKS["monotonicity"](config).passed

    def test_monotonicity_needs_domain2(self, tmp_path: Path) -> None:
        config = parse_config("monotonicity", {"p": 2.0, "N": 49, "out": tmp_path})
        with pytest.raises(ConfigError):
            CHECKS["monotonicity"](config)

    def test_singular(self, tmp_path: Path) -> None:
        config = parse_config(
            "singular", {"p": 2.0, "v": "sine_mode 1", "c1": PI4**-1, "out": tmp_path}
        )
        assert CHECKS["singular"](config).passed

    def test_morse(self, tmp_path: Path) -> None:
        config = parse_config("morse", {"N": 49, "out": tmp_path})
        result = CHECKS["morse"](config)
        assert result.passed
        assert len(result.rows) == 5


def test_execute_prints_one_line_per_check(tmp_path: Path) -> None:
    console = Console(record=True, width=200)
    status = execute(parse_config("young", {"out": tmp_path}), console)
    assert status == 0
    text = console.export_text()
    assert "PASS young" in text
    assert (tmp_path / "young.data.csv").exists()


def test_execute_reports_failure(tmp_path: Path) -> None:
    console = Console(record=True, width=200)
    config = parse_config("eigen", {"p": 3.0, "N": 49, "max_iters": 1, "out": tmp_path})
    assert execute(config, console) == 1
    assert "FAIL eigen" in console.export_text()
    assert _report(tmp_path, "eigen")["passed"] is False
