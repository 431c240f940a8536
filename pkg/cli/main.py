"""
Command-line interface for bargraph-corners.

Usage:
    bargraph-corners enumerate --cells 4                 # every bargraph with 4 cells
    bargraph-corners enumerate --cells 4 --setpart       # every set partition of [4]
    bargraph-corners census --cells-max 8 --format csv   # corner census per (cells, columns)
    bargraph-corners series --gf G --xcap 8 --ycap 8     # total type A corners
    bargraph-corners verify                              # errata report as JSON
"""
from __future__ import annotations

from collections.abc import Iterator
from contextlib import contextmanager
from fractions import Fraction
from pathlib import Path

import click

from algebra.series import TruncatedSeries
from cli.output import (
    CENSUS_COLUMNS,
    CENSUS_CSV_COLUMNS,
    census_csv_records,
    census_records,
    emit,
    series_records,
    to_csv,
)
from combinatorics.bargraph import corners, enumerate_bargraphs
from combinatorics.census import census_bargraphs, census_setpartitions
from combinatorics.setpartition import as_bargraph, enumerate_setpartitions
from genfuncs.marking import Marking
from genfuncs.type_a import printed as printed_a
from genfuncs.type_a import setpartitions as setpart_a
from genfuncs.type_a.solver import solve_system_a
from genfuncs.type_b import printed as printed_b
from genfuncs.type_b import setpartitions as setpart_b
from genfuncs.type_b.solver import solve_system_b
from utils.config import get_settings
from utils.errors import ConfigurationError, InvalidWordError, UsageError
from utils.logging import configure_logging, get_logger
from utils.models import CornerKind, MarkMode, OutputFormat
from verification.report import ERRATA_COLUMNS, build_report, engine_version, render_json, render_rows
from verification.suite import FORMULA_IDS, SuiteConfig, run_suite

__all__ = ["cli"]

logger = get_logger(__name__)

FORMAT_OPTION = click.option(
    "--format",
    "fmt",
    type=click.Choice([f.value for f in OutputFormat]),
    default=OutputFormat.JSON.value,
    show_default=True,
    help="Output format.",
)


@contextmanager
def usage_errors() -> Iterator[None]:
    """Engine input errors become click usage errors (exit code 2)."""
    try:
        yield
    except (UsageError, ConfigurationError, InvalidWordError) as exc:
        raise click.UsageError(str(exc)) from exc


@click.group()
@click.version_option(version=engine_version(), prog_name="bargraph-corners")
@click.option("--log-level", default=None, help="Override BARGRAPH_LOG_LEVEL.")
def cli(log_level: str | None) -> None:
    """
    Corner statistics of bargraphs and set partitions, computed exactly.

    Examples:

        bargraph-corners enumerate --cells 3

        bargraph-corners series --gf Qk_A --k 2 --xcap 6

        bargraph-corners verify --xcap 12 --ycap 12 --format plain
    """
    settings = get_settings()
    configure_logging(log_level or settings.log_level, environment=settings.environment)


# ─────────────────────────────────────────────────────────────────────────────
# enumerate
# ─────────────────────────────────────────────────────────────────────────────

@cli.command("enumerate")
@click.option("--cells", "n", type=int, required=True, help="Cells (bargraphs) or ground-set size (--setpart).")
@click.option("--columns", type=int, default=None, help="Only bargraphs with this many columns.")
@click.option("--max-height", type=int, default=None, help="Only bargraphs no taller than this.")
@click.option("--setpart", is_flag=True, help="Enumerate set partitions as restricted growth words.")
@click.option("--blocks", type=int, default=None, help="Only set partitions with this many blocks.")
@FORMAT_OPTION
def enumerate_cmd(
    n: int, columns: int | None, max_height: int | None, setpart: bool, blocks: int | None, fmt: str
) -> None:
    """List every object with its type A and type B corners."""
    if blocks is not None and not setpart:
        raise click.UsageError("--blocks requires --setpart")
    if setpart and (columns is not None or max_height is not None):
        raise click.UsageError("--columns and --max-height apply to bargraphs only")
    settings = get_settings()
    with usage_errors():
        if setpart:
            settings.check_setpart(n)
            objects = [(w.word(), w.size, w.blocks, as_bargraph(w)) for w in enumerate_setpartitions(n, blocks)]
        else:
            settings.check_cells(n)
            objects = [(g.word(), g.cells, g.columns, g) for g in enumerate_bargraphs(n, columns, max_height)]

    records = []
    for word, size, k, g in objects:
        found = corners(g)
        records.append(
            {
                "word": word,
                "n": size,
                "k": k,
                "corners_A": sum(1 for c in found if c.kind is CornerKind.A),
                "corners_B": sum(1 for c in found if c.kind is CornerKind.B),
                "corners": " ".join(c.label() for c in found),
            }
        )
    title = "Set partitions" if setpart else "Bargraphs"
    emit(records, OutputFormat(fmt), columns=["word", "n", "k", "corners_A", "corners_B", "corners"], title=title)


# ─────────────────────────────────────────────────────────────────────────────
# census
# ─────────────────────────────────────────────────────────────────────────────

@cli.command()
@click.option("--cells-max", "n_max", type=int, required=True, help="Largest cell count (or ground set).")
@click.option("--max-height", type=int, default=None, help="Height bound for bargraphs.")
@click.option("--setpart", is_flag=True, help="Census of set partitions keyed by (n, blocks).")
@click.option("--workers", type=int, default=None, help="Processes; defaults to BARGRAPH_WORKERS.")
@FORMAT_OPTION
def census(n_max: int, max_height: int | None, setpart: bool, workers: int | None, fmt: str) -> None:
    """Counts and corner totals per (n, k), with per-(a,b) breakdowns."""
    if setpart and max_height is not None:
        raise click.UsageError("--max-height applies to bargraphs only")
    with usage_errors():
        if setpart:
            table = census_setpartitions(n_max, workers=workers)
        else:
            table = census_bargraphs(n_max, max_height, workers=workers)
    rows = table.rows()
    output = OutputFormat(fmt)
    if output is OutputFormat.CSV:
        emit(census_csv_records(rows), output, columns=CENSUS_CSV_COLUMNS, title="Census")
    else:
        emit(census_records(rows), output, columns=CENSUS_COLUMNS, title="Census")


# ─────────────────────────────────────────────────────────────────────────────
# series
# ─────────────────────────────────────────────────────────────────────────────

GF_HELP = """
\b
H            type A corners, order-by-order solution (marks via --mark)
J            type B corners, order-by-order solution (marks via --mark)
HN / JN      the same restricted to heights <= --N
G            printed total type A corners G(x,y)
T_A          printed (v,w)-corner total T(x,y), type A
T_B          printed (v,w)-corner total T(x,y), type B
H_B_printed  printed total type B corners H(x,y)
Pk_A / Pk_B  set partitions with --k blocks, series in t (t-cap = --xcap)
Qk_A / Qk_B  closed form of the corner total over those partitions
"""

GF_CHOICES = ["H", "J", "G", "T_A", "T_B", "H_B_printed", "HN", "JN", "Pk_A", "Pk_B", "Qk_A", "Qk_B"]
UNIVARIATE = {"Pk_A", "Pk_B", "Qk_A", "Qk_B"}


def parse_weight(weight: str | None) -> Fraction | None:
    if weight is None:
        return None
    try:
        return Fraction(weight)
    except (ValueError, ZeroDivisionError) as exc:
        raise click.UsageError(f"--weight must be a rational, got {weight!r}") from exc


def build_marking(mark: str, v: int | None, w: int | None, weight: str | None) -> Marking:
    value = parse_weight(weight)
    if mark == "all":
        return Marking.all(value)
    if mark == "vw":
        if v is None or w is None:
            raise click.UsageError("--mark vw needs --v and --w")
        return Marking.single(v, w, value)
    if weight is not None:
        raise click.UsageError("--weight needs --mark all or --mark vw")
    return Marking.unmarked()


def _require(name: str, value: int | None) -> int:
    if value is None:
        raise click.UsageError(f"--gf needs --{name}")
    return value


def compute_series(
    gf: str, xcap: int, ycap: int, marking: Marking, v: int | None, w: int | None, N: int | None, k: int | None
) -> TruncatedSeries:
    if gf == "H":
        return solve_system_a(xcap, ycap, marking).H
    if gf == "J":
        return solve_system_b(xcap, ycap, marking).J
    if gf == "HN":
        return solve_system_a(xcap, ycap, marking, hmax=_require("N", N)).H
    if gf == "JN":
        return solve_system_b(xcap, ycap, marking, hmax=_require("N", N)).J
    if gf == "G":
        return printed_a.gf_total_a(xcap, ycap)
    if gf == "H_B_printed":
        return printed_b.gf_total_b_printed(xcap, ycap)
    if gf == "T_A":
        return printed_a.gf_vw_a(_require("v", v), _require("w", w), xcap, ycap)
    if gf == "T_B":
        return printed_b.gf_vw_b_printed(_require("v", v), _require("w", w), xcap, ycap)
    if gf == "Pk_A":
        return setpart_a.pk_series_a(_require("k", k), xcap, marking if marking.mode is not MarkMode.UNMARKED else None)
    if gf == "Pk_B":
        return setpart_b.pk_series_b(_require("k", k), xcap, marking if marking.mode is not MarkMode.UNMARKED else None)
    if gf == "Qk_A":
        return setpart_a.qk_closed_a(_require("k", k), xcap)
    return setpart_b.qk_closed_b(_require("k", k), xcap)


@cli.command(help="Coefficient table of one generating function.\n" + GF_HELP)
@click.option("--gf", type=click.Choice(GF_CHOICES), required=True)
@click.option("--mark", type=click.Choice(["none", "all", "vw"]), default="none", show_default=True)
@click.option("--weight", default=None, help="Exact mark value such as 2 or -1/2 instead of 1+eps.")
@click.option("--v", type=int, default=None)
@click.option("--w", type=int, default=None)
@click.option("--N", "N", type=int, default=None, help="Height bound for HN / JN.")
@click.option("--k", type=int, default=None, help="Block count for Pk_* / Qk_*.")
@click.option("--xcap", type=int, required=True)
@click.option("--ycap", type=int, default=None, help="Defaults to --xcap; ignored for Pk_* and Qk_*.")
@FORMAT_OPTION
def series(
    gf: str,
    mark: str,
    weight: str | None,
    v: int | None,
    w: int | None,
    N: int | None,
    k: int | None,
    xcap: int,
    ycap: int | None,
    fmt: str,
) -> None:
    if gf in UNIVARIATE:
        ycap = 0
    elif ycap is None:
        ycap = xcap
    with usage_errors():
        settings = get_settings()
        settings.check_caps(xcap, ycap)
        if k is not None:
            settings.check_blocks(k)
        marking = build_marking(mark, v, w, weight)
        result = compute_series(gf, xcap, ycap, marking, v, w, N, k)
    records, columns = series_records(result)
    emit(records, OutputFormat(fmt), columns=columns, title=gf)


# ─────────────────────────────────────────────────────────────────────────────
# verify
# ─────────────────────────────────────────────────────────────────────────────

@cli.command()
@click.option("--xcap", type=int, default=None, help="Series x-cap; defaults to BARGRAPH_VERIFY_XCAP.")
@click.option("--ycap", type=int, default=None, help="Series y-cap; defaults to BARGRAPH_VERIFY_YCAP.")
@click.option("--setpart-max", type=int, default=None, help="Largest ground set for set-partition checks.")
@click.option("--vw-max", type=int, default=None, help="Largest v and w for single-corner checks.")
@click.option("--only", multiple=True, type=click.Choice(list(FORMULA_IDS)), help="Run only these checks.")
@click.option("--output", "-o", type=click.Path(dir_okay=False, path_type=Path), default=None)
@FORMAT_OPTION
def verify(
    xcap: int | None,
    ycap: int | None,
    setpart_max: int | None,
    vw_max: int | None,
    only: tuple[str, ...],
    output: Path | None,
    fmt: str,
) -> None:
    """
    Cross-check every route and every printed display; write the errata report.

    Exit status is 1 only when two of our own routes disagree.  Printed
    displays that disagree are findings and leave the exit status at 0.
    """
    output_format = OutputFormat(fmt)
    if output_format is OutputFormat.PLAIN and output is not None:
        raise click.UsageError("--format plain prints to the terminal; use json or csv with --output")
    settings = get_settings()
    with usage_errors():
        results = run_suite(xcap, ycap, setpart_max, vw_max, settings=settings, only=only or None)
    config = SuiteConfig.from_settings(settings, xcap=xcap, ycap=ycap, setpart_n_max=setpart_max, vw_max=vw_max)
    report = build_report(config, results)

    if output_format is OutputFormat.PLAIN:
        emit(render_rows(report), output_format, columns=ERRATA_COLUMNS[:-1], title="Errata")
    else:
        text = render_json(report) if output_format is OutputFormat.JSON else to_csv(render_rows(report), ERRATA_COLUMNS)
        if output is not None:
            output.write_text(text, encoding="utf-8")
        else:
            click.echo(text, nl=False)

    failures = report.internal_failures
    logger.info("verify_complete", checks=len(results), internal_failures=len(failures))
    if failures:
        click.echo("internal inconsistency: " + ", ".join(r.formula_id for r in failures), err=True)
        raise SystemExit(1)
