#!/usr/bin/env python3

"""
count_pipeline.py

Command-line front end of the circled-letter array counting engine.

Subcommands:
1. count  : P, H, V, R, S, W, C for one m x n grid by a chosen method
            (auto = EGF values cross-checked against every other path within
            its limits).
2. table  : every non-square grid with m * n <= --max-cells, rows sorted by
            (m * n, m, n), as CSV (header m,n,P,H,V,R,S,W), JSON or markdown.
            --provenance cross-checks each row and adds a `checks` column.
3. series : exact coefficients of one generating-function exponent and of its
            exponential, one `i,j,k,num/den` line per multi-degree.
4. verify : the full verification suite; prints a pass/fail matrix.

Exit status:
    0 success, 1 mismatch or inconsistency, 2 invalid flags or method
    unavailable, 3 W/C requested for a square grid, 4 oracle limit refused.

Data goes to standard output; logs, warnings and errors go to standard error.

Configuration:
- Defaults and limits come from `wordrep.config`; the only environment
  variable is WORDREP_ORACLE_MAX_CELLS.

Usage:
    wordrep count 3 1
    wordrep count 2 3 --quantities S --json
    wordrep table --max-cells 15 --format markdown
    wordrep series --which P --caps 0,0,3
    wordrep verify --max-cells 10
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Optional, Sequence

from wordrep import __version__, config
from wordrep.algebra.series import format_coefficient
from wordrep.counting import egf_counts
from wordrep.counting.models import GridShape, shapes_up_to
from wordrep.exceptions import (
    InconsistencyError,
    MethodUnavailableError,
    OracleLimitError,
    SquareShapeError,
    WordRepError,
)
from wordrep.pipeline import verification
from wordrep.utils import table_writer

logger = logging.getLogger("wordrep")

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_SQUARE = 3
EXIT_ORACLE_LIMIT = 4

EXIT_CODES = (
    (InconsistencyError, EXIT_MISMATCH),
    (MethodUnavailableError, EXIT_USAGE),
    (SquareShapeError, EXIT_SQUARE),
    (OracleLimitError, EXIT_ORACLE_LIMIT),
)


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _log_report_findings(report) -> bool:
    for note in report.notes:
        logger.warning(note)
    for check in report.failed_checks:
        logger.error(
            "Check failed on %s: %s (%s expected %s, observed %s)",
            report.shape, check.name, check.quantity, check.expected, check.observed,
        )
    return not report.failed_checks


# ==========================================
# Subcommands
# ==========================================
def cmd_count(args: argparse.Namespace) -> int:
    shape = GridShape(m=args.m, n=args.n)
    quantities = args.quantities.split(",") if args.quantities else None
    report = egf_counts.count_report(shape, args.method, quantities=quantities)
    clean = _log_report_findings(report)
    if args.json:
        _emit(table_writer.render_count_json(report))
    else:
        _emit(table_writer.render_count_line(report))
    return EXIT_OK if clean else EXIT_MISMATCH


def cmd_table(args: argparse.Namespace) -> int:
    shapes = shapes_up_to(args.max_cells, rectangular=True)
    method = "auto" if args.provenance else "egf"
    reports = []
    clean = True
    for shape in shapes:
        report = egf_counts.count_report(shape, method, quantities=list(table_writer.TABLE_COLUMNS[2:]))
        clean = _log_report_findings(report) and clean
        reports.append(report)
    logger.info("Tabulated %d shapes with m*n <= %d", len(reports), args.max_cells)
    _emit(table_writer.render_table(reports, args.format, provenance=args.provenance))
    return EXIT_OK if clean else EXIT_MISMATCH


def _parse_caps(text: str) -> tuple:
    parts = text.split(",")
    if len(parts) != 3:
        raise ValueError(f"--caps needs three comma-separated degrees, got {text!r}")
    caps = tuple(int(p) for p in parts)
    if any(c < 0 for c in caps):
        raise ValueError(f"--caps must be non-negative, got {text!r}")
    return caps


def cmd_series(args: argparse.Namespace) -> int:
    caps = _parse_caps(args.caps)
    exponent = egf_counts.exponent_for(args.which, caps)
    lines = ["# exponent"]
    lines += [f"{i},{j},{k},{format_coefficient(v)}" for (i, j, k), v in exponent.dense_terms()]
    lines.append("# exp")
    lines += [f"{i},{j},{k},{format_coefficient(v)}" for (i, j, k), v in exponent.exp().dense_terms()]
    _emit("\n".join(lines))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    outcomes = verification.run_verification(args.max_cells)
    if args.json:
        _emit(json.dumps([o.model_dump() for o in outcomes], indent=2))
    else:
        _emit(verification.render_matrix(outcomes))
    passed = verification.verification_passed(outcomes)
    if not passed:
        failed = next(o for o in outcomes if not o.passed and not o.advisory)
        logger.error("Verification failed at %s: %s", failed.name, failed.counterexample)
    return EXIT_OK if passed else EXIT_MISMATCH


# ==========================================
# Entry point
# ==========================================
def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wordrep",
        description="Exact counts of m x n circled-letter arrays under D2 symmetry",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--verbose", action="store_true", help="Log at DEBUG level")
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", help="Counts for one grid shape")
    count.add_argument("m", type=int, help="Number of rows")
    count.add_argument("n", type=int, help="Number of columns")
    count.add_argument("--quantities", type=str, default=None, help="Comma list from P,H,V,R,S,W,C")
    count.add_argument("--method", choices=egf_counts.METHODS, default="auto", help="Computation path")
    count.add_argument("--json", action="store_true", help="Emit one JSON object")
    count.set_defaults(handler=cmd_count)

    table = sub.add_parser("table", help="Counts for every non-square shape up to a cell bound")
    table.add_argument("--max-cells", type=int, default=config.TABLE_MAX_CELLS, help="Largest m*n")
    table.add_argument("--format", choices=table_writer.FORMATS, default="csv", help="Output format")
    table.add_argument("--provenance", action="store_true", help="Cross-check rows and add a checks column")
    table.set_defaults(handler=cmd_table)

    series = sub.add_parser("series", help="Coefficients of one generating function")
    series.add_argument("--which", choices=list(egf_counts.EXPONENTS), required=True, help="Exponent selector")
    series.add_argument("--caps", type=str, required=True, help="Degree caps dx,dy,dz")
    series.set_defaults(handler=cmd_series)

    verify = sub.add_parser("verify", help="Run the verification suite")
    verify.add_argument("--max-cells", type=int, default=config.VERIFY_MAX_CELLS, help="Oracle sweep bound")
    verify.add_argument("--json", action="store_true", help="Emit the outcomes as JSON")
    verify.set_defaults(handler=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format=config.LOG_FORMAT,
        stream=sys.stderr,
        force=True,
    )
    try:
        return args.handler(args)
    except WordRepError as e:
        logger.error(str(e))
        for error_type, code in EXIT_CODES:
            if isinstance(e, error_type):
                return code
        return EXIT_MISMATCH
    except ValueError as e:
        logger.error(str(e))
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
