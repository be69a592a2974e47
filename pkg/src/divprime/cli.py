"""Command-line front end.

    divprime compute <n> [--format table|json|csv] [--with-oracle] [--cap D]
    divprime verify <lo> <hi> [--cap D] [--format table|json|csv]
    divprime export <n> [--style dot|adjacency-json] [--cap D]

Exit codes: 0 success or verified, 1 mismatch or cap exceeded, 2 usage
error.  The DIVPRIME_CAP environment variable overrides the built-in
oracle cap; an explicit --cap beats both.

Machine formats (json, csv) are byte-identical across runs: integers are
serialized as decimal strings so arbitrary sizes survive any JSON parser,
the Harary index as a reduced "p/q" string, and durations appear only in
the human-readable table output.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from fractions import Fraction
from time import perf_counter
from typing import Sequence

from .arithmetic import DEFAULT_CAP, CapExceededError, Factorization, factorize
from .formulas import cf_report
from .oracle import build_graph, edges
from .report import IndexReport, format_rational
from .verify import (
    MISMATCH,
    ORACLE_SKIPPED,
    VERIFIED,
    SweepSummary,
    verify_n,
    verify_range,
    verify_results,
)

__all__ = ["main", "CSV_COLUMNS"]

#: Fixed column set for all CSV output.  In compute mode the status column
#: carries the report's source tag; in verify mode the verification status.
CSV_COLUMNS = (
    "n",
    "D",
    "edges",
    "degree_sum",
    "wiener",
    "harary",
    "hyper_wiener",
    "zagreb1",
    "zagreb2",
    "gutman",
    "schultz",
    "eccentric_connectivity",
    "diameter",
    "status",
)

_REPORT_FIELD_BY_COLUMN = {
    "D": "divisor_count",
    "edges": "edge_count",
}


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="divprime",
        description="Topological indices of divisor prime graphs, computed "
        "closed-form and cross-checked against brute force.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    compute = sub.add_parser("compute", help="report the indices of one n")
    compute.add_argument("n", type=_positive_int)
    compute.add_argument("--format", choices=("table", "json", "csv"), default="table")
    compute.add_argument(
        "--with-oracle",
        action="store_true",
        help="also run the brute-force path and diff the two reports",
    )
    compute.add_argument("--cap", type=_positive_int, default=None)

    verify = sub.add_parser("verify", help="sweep [lo, hi], comparing both paths")
    verify.add_argument("lo", type=_positive_int)
    verify.add_argument("hi", type=_positive_int)
    verify.add_argument("--cap", type=_positive_int, default=None)
    verify.add_argument("--format", choices=("table", "json", "csv"), default="table")

    export = sub.add_parser("export", help="serialize the graph of one n")
    export.add_argument("n", type=_positive_int)
    export.add_argument("--style", choices=("dot", "adjacency-json"), default="dot")
    export.add_argument("--cap", type=_positive_int, default=None)

    return parser


def _resolve_cap(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    if args.cap is not None:
        return args.cap
    raw = os.environ.get("DIVPRIME_CAP")
    if raw is None:
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        parser.error(f"DIVPRIME_CAP must be an integer, got {raw!r}")
    if cap < 1:
        parser.error(f"DIVPRIME_CAP must be positive, got {cap}")
    return cap


# ---------------------------------------------------------------------------
# report rendering


def _cell(report: IndexReport, column: str) -> str:
    if column == "harary":
        return format_rational(report.harary)
    if column == "diameter":
        return "" if report.diameter is None else str(report.diameter)
    field = _REPORT_FIELD_BY_COLUMN.get(column, column)
    return str(getattr(report, field))


def _report_json_dict(report: IndexReport) -> dict:
    data: dict = {}
    for column in CSV_COLUMNS[:-1]:  # status is not a report field
        if column == "diameter":
            data[column] = None if report.diameter is None else str(report.diameter)
        else:
            data[column] = _cell(report, column)
    data["source"] = report.source
    return data


def _rational_with_float(value: Fraction) -> str:
    try:
        return f"{format_rational(value)} ({float(value):.6f})"
    except OverflowError:
        return format_rational(value)


def _table_value(report: IndexReport, column: str) -> str:
    if column == "harary":
        return _rational_with_float(report.harary)
    if column == "diameter":
        return "-" if report.diameter is None else str(report.diameter)
    return _cell(report, column)


def _print_report_table(fact: Factorization, reports: list[IndexReport]) -> None:
    print(f"n = {fact.n} = {fact}" if fact.factors else "n = 1")
    print()
    headers = [r.source.replace("_", " ") for r in reports]
    label_width = max(len(c) for c in CSV_COLUMNS)
    rows = [["", *headers]] if len(reports) > 1 else []
    for column in CSV_COLUMNS[1:-1]:
        rows.append([column, *(_table_value(r, column) for r in reports)])
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    widths[0] = max(widths[0], label_width)
    for row in rows:
        print("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())


def _print_csv(rows: list[list[str]]) -> None:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    writer.writerows(rows)


def _csv_row(report: IndexReport, status: str) -> list[str]:
    return [*(_cell(report, column) for column in CSV_COLUMNS[:-1]), status]


# ---------------------------------------------------------------------------
# compute


def _cmd_compute(args: argparse.Namespace, cap: int) -> int:
    fact = factorize(args.n)

    if not args.with_oracle:
        start = perf_counter()
        report = cf_report(fact)
        elapsed = perf_counter() - start
        if args.format == "json":
            print(json.dumps(_report_json_dict(report), indent=2))
        elif args.format == "csv":
            _print_csv([_csv_row(report, report.source)])
        else:
            _print_report_table(fact, [report])
            print()
            print(f"elapsed: closed form {elapsed:.6f} s")
        return 0

    result = verify_n(args.n, cap=cap)
    if result.status == ORACLE_SKIPPED:
        if args.format == "json":
            data = _report_json_dict(result.closed_form)
            data["status"] = ORACLE_SKIPPED
            data["oracle_skipped_reason"] = result.oracle_skipped_reason
            print(json.dumps(data, indent=2))
        elif args.format == "csv":
            _print_csv([_csv_row(result.closed_form, ORACLE_SKIPPED)])
        else:
            _print_report_table(fact, [result.closed_form])
            print()
            print(f"status: oracle skipped ({result.oracle_skipped_reason})")
        print(f"oracle skipped: {result.oracle_skipped_reason}", file=sys.stderr)
        return 1

    mismatched = [c.name for c in result.comparisons if not c.equal]
    if args.format == "json":
        data = _report_json_dict(result.closed_form)
        data["oracle"] = _report_json_dict(result.oracle)
        data["status"] = result.status
        data["mismatches"] = mismatched
        print(json.dumps(data, indent=2))
    elif args.format == "csv":
        _print_csv(
            [
                _csv_row(result.closed_form, result.closed_form.source),
                _csv_row(result.oracle, result.oracle.source),
            ]
        )
    else:
        _print_report_table(fact, [result.closed_form, result.oracle])
        print()
        if result.status == VERIFIED:
            print(f"status: verified ({len(result.comparisons)}/{len(result.comparisons)} comparisons equal)")
        else:
            print(f"status: MISMATCH in {', '.join(mismatched)}")
        print(
            f"elapsed: closed form {result.elapsed_closed_form:.6f} s, "
            f"oracle {result.elapsed_oracle:.6f} s"
        )
    if result.status == MISMATCH:
        print(f"mismatch for n = {args.n}: {', '.join(mismatched)}", file=sys.stderr)
        return 1
    return 0


# ---------------------------------------------------------------------------
# verify


def _summary_json_dict(summary: SweepSummary) -> dict:
    return {
        "lo": str(summary.lo),
        "hi": str(summary.hi),
        "cap": str(summary.cap),
        "verified": str(summary.counts[VERIFIED]),
        "mismatch": str(summary.counts[MISMATCH]),
        "oracle_skipped": str(summary.counts[ORACLE_SKIPPED]),
        "mismatching_n": [str(n) for n in summary.mismatching_n],
        "max_divisor_count": str(summary.max_divisor_count),
    }


def _cmd_verify(args: argparse.Namespace, cap: int) -> int:
    if args.format == "csv":
        # Stream one row per n; values from the closed form, diameter from
        # the oracle when it ran.
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        mismatches = 0
        for result in verify_results(args.lo, args.hi, cap=cap):
            row = _csv_row(result.closed_form, result.status)
            if result.oracle is not None:
                row[CSV_COLUMNS.index("diameter")] = str(result.oracle.diameter)
            writer.writerow(row)
            mismatches += result.status == MISMATCH
        return 1 if mismatches else 0

    summary = verify_range(args.lo, args.hi, cap=cap)
    if args.format == "json":
        print(json.dumps(_summary_json_dict(summary), indent=2))
    else:
        counts = summary.counts
        print(
            f"verify {summary.lo}..{summary.hi} (cap {summary.cap}): "
            f"{counts[VERIFIED]} verified, {counts[MISMATCH]} mismatches, "
            f"{counts[ORACLE_SKIPPED]} oracle-skipped"
        )
        print(f"max divisor count: {summary.max_divisor_count}")
        if summary.mismatching_n:
            print("mismatching n:", ", ".join(map(str, summary.mismatching_n)))
        print(f"elapsed: {summary.total_elapsed:.3f} s")
    return 0 if summary.mismatch_free else 1


# ---------------------------------------------------------------------------
# export


def _cmd_export(args: argparse.Namespace, cap: int) -> int:
    fact = factorize(args.n)
    try:
        graph = build_graph(fact, cap=cap)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    if args.style == "dot":
        print(f"graph divprime_{graph.n} {{")
        for v in graph.vertices:
            print(f"  {v};")
        for u, v in edges(graph):
            print(f"  {u} -- {v};")
        print("}")
    else:
        data = {
            "n": str(graph.n),
            "vertices": [str(v) for v in graph.vertices],
            "edges": [[str(u), str(v)] for u, v in edges(graph)],
        }
        print(json.dumps(data, indent=2))
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    cap = _resolve_cap(args, parser)
    if args.command == "compute":
        return _cmd_compute(args, cap)
    if args.command == "verify":
        if args.lo > args.hi:
            parser.error(f"invalid range: lo={args.lo} exceeds hi={args.hi}")
        return _cmd_verify(args, cap)
    return _cmd_export(args, cap)


if __name__ == "__main__":
    sys.exit(main())
