"""Rendering of command output as JSON, CSV or a rich table."""
from __future__ import annotations

import csv
import io
import json
from collections.abc import Iterable, Sequence
from typing import Any

import click
from rich.console import Console
from rich.table import Table

from algebra.jet import deriv_of, value_of
from algebra.series import TruncatedSeries
from utils.models import CensusRow, OutputFormat
from verification.compare import render

console = Console()

Record = dict[str, Any]


def to_json(records: Sequence[Record]) -> str:
    return json.dumps(list(records), indent=2, ensure_ascii=False)


def to_csv(records: Sequence[Record], columns: Sequence[str]) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=list(columns), lineterminator="\n", extrasaction="ignore")
    writer.writeheader()
    writer.writerows(records)
    return buffer.getvalue()


def print_table(records: Sequence[Record], columns: Sequence[str], title: str) -> None:
    table = Table(title=title, show_header=True, header_style="bold magenta")
    for column in columns:
        table.add_column(column)
    for record in records:
        table.add_row(*(str(record.get(column, "")) for column in columns))
    console.print(table)


def emit(records: Sequence[Record], fmt: OutputFormat, *, columns: Sequence[str], title: str) -> None:
    if fmt is OutputFormat.JSON:
        click.echo(to_json(records))
    elif fmt is OutputFormat.CSV:
        click.echo(to_csv(records, columns), nl=False)
    else:
        print_table(records, columns, title)


# ─────────────────────────────────────────────────────────────────────────────
# Record builders
# ─────────────────────────────────────────────────────────────────────────────

def series_records(series: TruncatedSeries) -> tuple[list[Record], list[str]]:
    """Non-zero coefficients in (x, y) order; series in t alone are keyed by ``t``."""
    univariate = series.xcap == 0
    with_deriv = series.has_jets()
    columns = ["t"] if univariate else ["x", "y"]
    columns += ["value", "deriv"] if with_deriv else ["value"]
    records = []
    for (i, j), c in series.items():
        record: Record = {"t": j} if univariate else {"x": i, "y": j}
        record["value"] = render(value_of(c))
        if with_deriv:
            record["deriv"] = render(deriv_of(c))
        records.append(record)
    return records, columns


CENSUS_COLUMNS = ["n", "k", "count", "total_A", "total_B"]
CENSUS_CSV_COLUMNS = [*CENSUS_COLUMNS, "kind", "a", "b", "corners"]


def census_records(rows: Iterable[CensusRow]) -> list[Record]:
    return [row.model_dump(mode="json") for row in rows]


def census_csv_records(rows: Iterable[CensusRow]) -> list[Record]:
    """One line per (n, k, kind, a, b); rows without corners keep a single line with blank pair columns."""
    out = []
    for row in rows:
        base = {column: getattr(row, column) for column in CENSUS_COLUMNS}
        exploded = [("A", entry) for entry in row.per_ab_A] + [("B", entry) for entry in row.per_ab_B]
        if not exploded:
            out.append({**base, "kind": "", "a": "", "b": "", "corners": ""})
        for kind, (a, b, c) in exploded:
            out.append({**base, "kind": kind, "a": a, "b": b, "corners": c})
    return out
