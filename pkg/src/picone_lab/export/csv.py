"""Plot-ready CSV export."""

from __future__ import annotations

import csv
from collections.abc import Iterable, Mapping
from pathlib import Path


def _cell(value: object) -> object:
    return repr(value) if isinstance(value, float) else value


def export_rows_csv(name: str, rows: Iterable[Mapping[str, object]], output_dir: Path) -> Path:
    """Write ``<name>.data.csv``; columns follow the first row's keys.

    Floats are written with ``repr`` so they round-trip exactly.
    """
    rows = list(rows)
    output_dir.mkdir(parents=True, exist_ok=True)
    path = output_dir / f"{name}.data.csv"
    fieldnames = list(rows[0]) if rows else []
    with path.open("w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=fieldnames, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({k: _cell(v) for k, v in row.items()})
    return path
