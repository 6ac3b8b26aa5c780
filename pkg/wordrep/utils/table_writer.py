#!/usr/bin/env python3

"""
table_writer.py

Render count reports as CSV, JSON or markdown, and parse emitted CSV/JSON back.

- Counts are always decimal strings (they exceed 64 bits quickly); m and n are
  plain integers.
- CSV: header `m,n,P,H,V,R,S,W`, optionally followed by a `checks` column
  naming the methods that confirmed the row.
- JSON: an array of objects with string-valued counts.
- Markdown: a pipe table (pandas.DataFrame.to_markdown, backed by tabulate).

Parsing an emitted CSV or JSON table and rendering it again gives back the
same bytes.

Dependencies:
- pandas
- tabulate
"""

from __future__ import annotations

import json
from io import StringIO
from typing import Iterable

import pandas as pd

from wordrep.counting.models import CountReport

TABLE_COLUMNS = ("m", "n", "P", "H", "V", "R", "S", "W")
PROVENANCE_COLUMN = "checks"
FORMATS = ("csv", "json", "markdown")


def reports_to_frame(reports: Iterable[CountReport], provenance: bool = False) -> pd.DataFrame:
    rows = []
    for report in reports:
        row = {"m": report.shape.m, "n": report.shape.n}
        for quantity in TABLE_COLUMNS[2:]:
            value = report.value(quantity)
            row[quantity] = "" if value is None else str(value)
        if provenance:
            row[PROVENANCE_COLUMN] = "+".join(report.confirmed_by()) or "unchecked"
        rows.append(row)
    columns = list(TABLE_COLUMNS) + ([PROVENANCE_COLUMN] if provenance else [])
    frame = pd.DataFrame(rows, columns=columns)
    if frame.empty:
        return frame.astype({"m": "int64", "n": "int64"})
    return frame


def render_frame(frame: pd.DataFrame, fmt: str = "csv") -> str:
    if fmt == "csv":
        return frame.to_csv(index=False, lineterminator="\n")
    if fmt == "json":
        return frame.to_json(orient="records") + "\n"
    if fmt == "markdown":
        return frame.to_markdown(index=False, disable_numparse=True) + "\n"
    raise ValueError(f"unknown table format {fmt!r}; choose from {', '.join(FORMATS)}")


def render_table(reports: Iterable[CountReport], fmt: str = "csv", provenance: bool = False) -> str:
    return render_frame(reports_to_frame(reports, provenance=provenance), fmt)


def parse_table(text: str, fmt: str = "csv") -> pd.DataFrame:
    """Inverse of render_frame for CSV and JSON; counts stay strings."""
    if fmt == "csv":
        frame = pd.read_csv(StringIO(text), dtype=str, keep_default_na=False)
        return frame.astype({"m": "int64", "n": "int64"})
    if fmt == "json":
        return pd.read_json(StringIO(text), orient="records", dtype=False, convert_dates=False)
    raise ValueError(f"cannot parse {fmt!r} tables")


def render_count_line(report: CountReport) -> str:
    """One line like `3x1 P=30 H=8 V=30 R=8 S=8 W=19 C=0`."""
    fields = " ".join(f"{q}={v}" for q, v in report.values().items())
    return f"{report.shape} {fields}"


def render_count_json(report: CountReport) -> str:
    payload = {"m": report.shape.m, "n": report.shape.n}
    for quantity, value in report.values().items():
        payload[quantity] = str(value)
    payload["methods"] = dict(report.methods)
    payload["checks"] = [
        {"name": check.name, "passed": check.passed} for check in report.consistency
    ]
    return json.dumps(payload, separators=(",", ":"))
