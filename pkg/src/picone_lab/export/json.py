"""JSON export of experiment reports."""

from __future__ import annotations

from pathlib import Path
from typing import Any

from pydantic import BaseModel

from picone_lab.models.reports import ReportEnvelope


def envelope(name: str, report: BaseModel, passed: bool, config: dict[str, Any]) -> ReportEnvelope:
    """Wrap a report with its name, pass flag and the config that produced it."""
    return ReportEnvelope(
        name=name,
        passed=passed,
        config=config,
        report=report.model_dump(mode="json", by_alias=True),
    )


def export_report_json(env: ReportEnvelope, output_dir: Path) -> Path:
    """Write ``<name>.report.json``; identical envelopes give identical bytes."""
    output_dir.mkdir(parents=True, exist_ok=True)
    path = output_dir / f"{env.name}.report.json"
    path.write_text(env.model_dump_json(indent=2, by_alias=True) + "\n")
    return path
