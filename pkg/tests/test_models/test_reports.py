"""Tests for report models and the JSON envelope."""

import json

import pytest

from picone_lab.models import (
    SCHEMA_VERSION,
    EigenResult,
    HardyReport,
    HardyRow,
    PiconePointEval,
    PiconeVariant,
    ReportEnvelope,
)


def _hardy() -> HardyReport:
    row = HardyRow(u="bubble", lhs=0.8, rhs=0.2, margin=0.6, ratio=504.0, passed=True)
    return HardyReport(
        lambda_=97.4,
        p=2.0,
        g="poly 1",
        v="sine_mode 1",
        f="linear",
        rows=[row],
        all_pass=True,
        supersolution_residual_min=0.0,
        supersolution_holds=True,
        supersolution_method="jets",
        passed=True,
    )


def test_lambda_alias() -> None:
    report = HardyReport.model_validate({**_hardy().model_dump(by_alias=True), "lambda": 1.0})
    assert report.lambda_ == 1.0
    assert "lambda" in report.model_dump(by_alias=True)


def test_envelope_schema_alias() -> None:
    env = ReportEnvelope(name="hardy", passed=True, config={"p": 2.0}, report={})
    dumped = json.loads(env.model_dump_json(by_alias=True))
    assert dumped["schema"] == SCHEMA_VERSION
    assert list(dumped) == ["schema", "name", "passed", "config", "report"]


def test_eigenfunction_left_out_of_json() -> None:
    result = EigenResult(
        lambda_=97.0, method="oracle", p=2.0, N=9, iterations=3, grad_norm=0.0, eigenfunction=object()
    )
    dumped = result.model_dump(mode="json", by_alias=True)
    assert "eigenfunction" not in dumped
    assert dumped["lambda"] == 97.0


def test_point_eval_scale_and_row() -> None:
    ev = PiconePointEval(
        point=[0.25, 0.5],
        L=0.5,
        R=0.25,
        residual=0.25,
        term_I=0.5,
        term_II=0.0,
        term_III=0.0,
        admissible=True,
        variant=PiconeVariant.POWER,
    )
    assert ev.scale == 1.0
    row = ev.csv_row()
    assert list(row)[:3] == ["x0", "x1", "L"]
    assert row["variant"] == "power"
    assert ev.model_copy(update={"L": -3.0}).scale == pytest.approx(3.0)
