"""
The cross-check matrix.

Every check compares two independent routes coefficient by coefficient:
the brute-force census, the order-by-order solvers, the chain-sum closed
forms and the published displays.  ``internal`` checks compare our own routes
and must all MATCH; ``printed`` checks compare a published display against
the exact counts and report whatever the arithmetic says.
"""
from __future__ import annotations

from collections.abc import Callable, Iterator
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import cached_property

from algebra.jet import Jet
from algebra.series import SeriesRing, TruncatedSeries
from combinatorics.bargraph import Bargraph, corner_counts, corners, enumerate_bargraphs
from combinatorics.census import CensusTable, census_bargraphs, census_setpartitions, corner_weight_census
from combinatorics.stirling import stirling
from genfuncs.marking import Marking
from genfuncs.type_a import printed as printed_a
from genfuncs.type_a import setpartitions as setpart_a
from genfuncs.type_a.closed_form import closed_form_a, closed_form_first_height_a
from genfuncs.type_a.kernels import descent_kernel
from genfuncs.type_a.solver import solve_system_a
from genfuncs.type_b import printed as printed_b
from genfuncs.type_b import setpartitions as setpart_b
from genfuncs.type_b.closed_form import chain_sums_b, closed_form_b, closed_form_first_height_b
from genfuncs.type_b.kernels import drop_kernel
from genfuncs.type_b.solver import solve_system_b
from utils.config import Settings, get_settings
from utils.errors import UsageError
from utils.logging import get_logger, timed
from utils.models import CheckKind, CheckResult, CheckStatus, CornerKind, Discrepancy, MarkMode
from verification.compare import (
    all_mismatches,
    compare_series,
    first_discrepancy,
    is_asymptotic,
    restrict,
    series_table,
    univariate_table,
    window_ratios,
)

logger = get_logger(__name__)

RESTRICTED_HEIGHTS = (1, 2, 3, 4)
FIRST_HEIGHTS = (1, 2, 3, 4)
WEIGHTED_CAP = 12
BALANCE_CAP = 14
EXAMPLE_WORD = "244411322"
# corners as labelled in the printed drawing of EXAMPLE_WORD, left to right
EXAMPLE_CORNERS = ((CornerKind.B, 3, 3), (CornerKind.A, 3, 2), (CornerKind.B, 1, 1), (CornerKind.A, 1, 2))


# ─────────────────────────────────────────────────────────────────────────────
# Configuration and shared oracle data
# ─────────────────────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class SuiteConfig:
    xcap: int
    ycap: int
    setpart_n_max: int
    vw_max: int
    blocks_max: int
    columns_max: int
    closed_blocks_max: int
    closed_columns_max: int
    asymptotic_window: int

    @classmethod
    def from_settings(cls, settings: Settings, **overrides: int) -> SuiteConfig:
        values = dict(
            xcap=settings.verify_xcap,
            ycap=settings.verify_ycap,
            setpart_n_max=settings.verify_setpart_max,
            vw_max=settings.verify_vw_max,
            blocks_max=settings.verify_blocks_max,
            columns_max=settings.verify_columns_max,
            closed_blocks_max=settings.verify_closed_blocks_max,
            closed_columns_max=settings.verify_closed_columns_max,
            asymptotic_window=settings.verify_asymptotic_window,
        )
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    def as_dict(self) -> dict[str, int]:
        return asdict(self)


class SuiteContext:
    def __init__(self, config: SuiteConfig, settings: Settings) -> None:
        self.config = config
        self.settings = settings
        self._restricted: dict[int, CensusTable] = {}

    @property
    def oracle_cap(self) -> int:
        return min(self.config.xcap, self.settings.max_cells)

    @cached_property
    def bargraphs(self) -> CensusTable:
        return census_bargraphs(self.oracle_cap)

    @cached_property
    def setpartitions(self) -> CensusTable:
        return census_setpartitions(self.config.setpart_n_max)

    def restricted(self, hmax: int) -> CensusTable:
        if hmax not in self._restricted:
            self._restricted[hmax] = census_bargraphs(self.oracle_cap, hmax=hmax)
        return self._restricted[hmax]

    def vw_pairs(self) -> Iterator[tuple[int, int]]:
        for v in range(1, self.config.vw_max + 1):
            for w in range(1, self.config.vw_max + 1):
                yield v, w

    def markings(self) -> list[Marking]:
        return [Marking.unmarked(), Marking.all()] + [Marking.single(v, w) for v, w in self.vw_pairs()]


def oracle_series(
    census: CensusTable, kind: CornerKind, marking: Marking, xcap: int, ycap: int
) -> TruncatedSeries:
    """The census as a series: value = object count, derivative = marked corners."""
    coeffs = {}
    for (n, k), rec in census.records.items():
        if marking.mode is MarkMode.ALL:
            coeffs[(n, k)] = Jet(rec.count, rec.total(kind))
        elif marking.mode is MarkMode.SINGLE:
            coeffs[(n, k)] = Jet(rec.count, rec.per_ab(kind)[(marking.v, marking.w)])
        else:
            coeffs[(n, k)] = rec.count
    return TruncatedSeries(xcap, ycap, coeffs)


# ─────────────────────────────────────────────────────────────────────────────
# Check registry
# ─────────────────────────────────────────────────────────────────────────────

@dataclass
class Outcome:
    discrepancy: Discrepancy | None = None
    ranges: dict[str, str] = field(default_factory=dict)
    diagnostics: dict[str, str] = field(default_factory=dict)
    asymptotic: bool = False

    def note(self, discrepancy: Discrepancy | None, **diagnostics: str) -> bool:
        """Keep the first discrepancy seen; returns True once one is recorded."""
        if self.discrepancy is None and discrepancy is not None:
            self.discrepancy = discrepancy
            self.diagnostics.update(diagnostics)
        return self.discrepancy is not None


@dataclass(frozen=True)
class Check:
    formula_id: str
    title: str
    kind: CheckKind
    run: Callable[[SuiteContext], Outcome]


_REGISTRY: list[Check] = []


def check(formula_id: str, title: str, kind: CheckKind) -> Callable:
    def register(fn: Callable[[SuiteContext], Outcome]) -> Callable[[SuiteContext], Outcome]:
        _REGISTRY.append(Check(formula_id, title, kind, fn))
        return fn

    return register


INTERNAL = CheckKind.INTERNAL
PRINTED = CheckKind.PRINTED


def _caps(ctx: SuiteContext) -> dict[str, str]:
    return {"xcap": str(ctx.config.xcap), "ycap": str(ctx.config.ycap)}


def _oracle_caps(ctx: SuiteContext) -> dict[str, str]:
    return {"cells": f"0..{ctx.oracle_cap}", "columns": f"0..{ctx.config.ycap}"}


# ─────────────────────────────────────────────────────────────────────────────
# Structure
# ─────────────────────────────────────────────────────────────────────────────

@check("structure/corner-balance", "Every nonempty bargraph has one more B corner than A corners", INTERNAL)
def _corner_balance(ctx: SuiteContext) -> Outcome:
    top = min(ctx.oracle_cap, BALANCE_CAP)
    out = Outcome(ranges={"cells": f"1..{top}"})
    for n in range(1, top + 1):
        for g in enumerate_bargraphs(n):
            count_a, count_b = corner_counts(g)
            descents = sum(1 for i in range(1, g.columns) if g.heights[i - 1] > g.heights[i])
            if count_a != descents:
                out.note(Discrepancy(index=[n, g.columns], expected=str(descents), got=str(count_a)), word=g.word())
            if count_b != count_a + 1:
                out.note(Discrepancy(index=[n, g.columns], expected=str(count_a + 1), got=str(count_b)), word=g.word())
            if out.discrepancy:
                return out
    return out


@check("structure/b-minus-a", "Total B minus total A corners equals the bargraph count per (cells, columns)", INTERNAL)
def _b_minus_a(ctx: SuiteContext) -> Outcome:
    cfg = ctx.config
    out = Outcome(ranges=_caps(ctx))
    counts = series_table(solve_system_a(cfg.xcap, cfg.ycap).H)
    counts.pop((0, 0), None)
    h_deriv = series_table(solve_system_a(cfg.xcap, cfg.ycap, Marking.all()).H, "deriv")
    j_deriv = series_table(solve_system_b(cfg.xcap, cfg.ycap, Marking.all()).J, "deriv")
    difference = {key: j_deriv.get(key, 0) - h_deriv.get(key, 0) for key in set(h_deriv) | set(j_deriv)}
    out.note(first_discrepancy(counts, difference, part="deriv"), route="solvers")
    census = ctx.bargraphs
    oracle_counts = {key: c for key, c in census.counts().items() if key != (0, 0)}
    oracle_diff = {key: rec.total_b - rec.total_a for key, rec in census.records.items()}
    out.note(first_discrepancy(oracle_counts, oracle_diff), route="census")
    return out


@check("bargraph/worked-example-corners", "Corners labelled in the worked example 244411322", PRINTED)
def _worked_example_corners(ctx: SuiteContext) -> Outcome:
    out = Outcome(ranges={"word": EXAMPLE_WORD})
    extracted = [(c.kind, c.a, c.b) for c in corners(Bargraph.parse(EXAMPLE_WORD))]

    def label(entry: tuple[CornerKind, int, int] | None) -> str:
        return "none" if entry is None else f"{entry[0].value}({entry[1]},{entry[2]})"

    for position in range(max(len(extracted), len(EXAMPLE_CORNERS))):
        want = extracted[position] if position < len(extracted) else None
        have = EXAMPLE_CORNERS[position] if position < len(EXAMPLE_CORNERS) else None
        if want != have:
            out.note(Discrepancy(index=[position + 1], expected=label(want), got=label(have)))
            break
    out.diagnostics["extracted"] = " ".join(c.label() for c in corners(Bargraph.parse(EXAMPLE_WORD)))
    return out


# ─────────────────────────────────────────────────────────────────────────────
# Internal routes, both corner types
# ─────────────────────────────────────────────────────────────────────────────

def _full_gf(ctx: SuiteContext, kind: CornerKind) -> Outcome:
    cfg = ctx.config
    out = Outcome(ranges={**_caps(ctx), "markings": f"unmarked, all, single(v,w) v,w<={cfg.vw_max}"})
    for marking in ctx.markings():
        if kind is CornerKind.A:
            solved = solve_system_a(cfg.xcap, cfg.ycap, marking).H
            closed = closed_form_a(cfg.xcap, cfg.ycap, marking)
        else:
            solved = solve_system_b(cfg.xcap, cfg.ycap, marking).J
            closed = closed_form_b(cfg.xcap, cfg.ycap, marking)
        if out.note(compare_series(solved, closed), marking=marking.describe(), route="solver vs closed form"):
            return out
        oracle = oracle_series(ctx.bargraphs, kind, marking, ctx.oracle_cap, cfg.ycap)
        if out.note(
            compare_series(oracle, solved.truncate(ctx.oracle_cap, cfg.ycap)),
            marking=marking.describe(),
            route="census vs solver",
        ):
            return out
    return out


def _weighted_gf(ctx: SuiteContext, kind: CornerKind) -> Outcome:
    cap = min(ctx.oracle_cap, WEIGHTED_CAP)
    ycap = min(ctx.config.ycap, cap)
    markings = [Marking.all(2), Marking.single(1, 1, 3), Marking.all(Fraction(-1, 2))]
    out = Outcome(ranges={"cells": f"0..{cap}", "columns": f"0..{ycap}", "weights": "all=2, single(1,1)=3, all=-1/2"})
    for marking in markings:
        if kind is CornerKind.A:
            solved = solve_system_a(cap, ycap, marking).H
            closed = closed_form_a(cap, ycap, marking)
        else:
            solved = solve_system_b(cap, ycap, marking).J
            closed = closed_form_b(cap, ycap, marking)
        oracle = TruncatedSeries(cap, ycap, corner_weight_census(cap, kind, marking))
        if out.note(compare_series(solved, closed), marking=marking.describe(), route="solver vs closed form"):
            return out
        if out.note(compare_series(oracle, solved), marking=marking.describe(), route="census vs solver"):
            return out
    return out


def _unmarked_collapse(ctx: SuiteContext, kind: CornerKind) -> Outcome:
    cfg = ctx.config
    r = SeriesRing(cfg.xcap, cfg.ycap)
    out = Outcome(ranges=_caps(ctx))
    expected = (1 - r.x) / (1 - r.x - r.x * r.y)
    if kind is CornerKind.A:
        routes = {"solver": solve_system_a(cfg.xcap, cfg.ycap).H, "closed form": closed_form_a(cfg.xcap, cfg.ycap)}
        kernel = descent_kernel
    else:
        routes = {"solver": solve_system_b(cfg.xcap, cfg.ycap).J, "closed form": closed_form_b(cfg.xcap, cfg.ycap)}
        kernel = drop_kernel
    for route, series in routes.items():
        if out.note(compare_series(expected, series), route=route):
            return out
    unmarked = Marking.unmarked()
    for a in range(2, cfg.xcap + 1):
        for b in range(1, a):
            residue = kernel(a, b, unmarked, cfg.xcap, cfg.ycap)
            if not residue.is_zero():
                (i, j), c = next(residue.items())
                out.note(Discrepancy(index=[a, b, i, j], expected="0", got=str(c)), route="kernel")
                return out
    return out


def _restricted_gf(ctx: SuiteContext, kind: CornerKind) -> Outcome:
    cfg = ctx.config
    r = SeriesRing(cfg.xcap, cfg.ycap)
    out = Outcome(ranges={**_caps(ctx), "height_bounds": ",".join(map(str, RESTRICTED_HEIGHTS))})
    for hmax in RESTRICTED_HEIGHTS:
        for marking in (Marking.unmarked(), Marking.all()):
            if kind is CornerKind.A:
                solved = solve_system_a(cfg.xcap, cfg.ycap, marking, hmax=hmax).H
                closed = closed_form_a(cfg.xcap, cfg.ycap, marking, hmax=hmax)
            else:
                solved = solve_system_b(cfg.xcap, cfg.ycap, marking, hmax=hmax).J
                closed = closed_form_b(cfg.xcap, cfg.ycap, marking, hmax=hmax)
            if out.note(compare_series(solved, closed, prefix=(hmax,)), marking=marking.describe(), route="solver vs closed form"):
                return out
            oracle = oracle_series(ctx.restricted(hmax), kind, marking, ctx.oracle_cap, cfg.ycap)
            if out.note(
                compare_series(oracle, solved.truncate(ctx.oracle_cap, cfg.ycap), prefix=(hmax,)),
                marking=marking.describe(),
                route="census vs solver",
            ):
                return out
        # all marks 1: 1 / (1 - y (x + ... + x^N))
        columns = r.sum(r.mono(j, 1) for j in range(1, hmax + 1))
        solver = solve_system_a if kind is CornerKind.A else solve_system_b
        unmarked = solver(cfg.xcap, cfg.ycap, Marking.unmarked(), hmax=hmax)
        series = unmarked.H if kind is CornerKind.A else unmarked.J
        if out.note(compare_series((1 - columns).inverse(), series, prefix=(hmax,)), route="unmarked collapse"):
            return out
    return out


def _first_height(ctx: SuiteContext, kind: CornerKind) -> Outcome:
    cap = min(ctx.config.xcap, WEIGHTED_CAP)
    ycap = min(ctx.config.ycap, WEIGHTED_CAP)
    out = Outcome(ranges={"xcap": str(cap), "ycap": str(ycap), "heights": "1..4", "height_bounds": "none, 3"})
    for hmax in (None, 3):
        for marking in (Marking.all(), Marking.single(1, 1), Marking.all(2)):
            for a in FIRST_HEIGHTS:
                if kind is CornerKind.A:
                    closed = closed_form_first_height_a(a, cap, ycap, marking, hmax)
                    solved = solve_system_a(cap, ycap, marking, hmax).H_a.get(a, closed.zero(cap, ycap))
                else:
                    closed = closed_form_first_height_b(a, cap, ycap, marking, hmax)
                    solved = solve_system_b(cap, ycap, marking, hmax).J_a.get(a, closed.zero(cap, ycap))
                if out.note(
                    compare_series(solved, closed, prefix=(a,)),
                    marking=marking.describe(),
                    height_bound=str(hmax),
                ):
                    return out
    return out


def _setpart_product(ctx: SuiteContext, kind: CornerKind) -> Outcome:
    cfg = ctx.config
    product = setpart_a.pk_series_a if kind is CornerKind.A else setpart_b.pk_series_b
    closed = setpart_a.pk_series_a_closed if kind is CornerKind.A else setpart_b.pk_series_b_closed
    out = Outcome(
        ranges={
            "blocks": f"1..{cfg.blocks_max}",
            "columns": f"0..{cfg.columns_max}",
            "corner_totals": f"n<={min(cfg.setpart_n_max, cfg.columns_max)}",
            "closed_product": f"blocks<={cfg.closed_blocks_max}, columns<={cfg.closed_columns_max}",
        }
    )
    totals = ctx.setpartitions.totals(kind)
    for k in range(1, cfg.blocks_max + 1):
        series = product(k, cfg.columns_max)
        values = {(n,): stirling(n, k) for n in range(cfg.columns_max + 1)}
        if out.note(first_discrepancy(values, univariate_table(series), part="value", prefix=(k,)), route="Stirling numbers"):
            return out
        top = min(cfg.setpart_n_max, cfg.columns_max)
        derivs = {(n,): totals.get((n, k), 0) for n in range(top + 1)}
        got = restrict(univariate_table(series, "deriv"), (top,))
        if out.note(first_discrepancy(derivs, got, part="deriv", prefix=(k,)), route="census"):
            return out
    for k in range(1, cfg.closed_blocks_max + 1):
        solved = product(k, cfg.closed_columns_max)
        if out.note(compare_series(solved, closed(k, cfg.closed_columns_max), prefix=(k,)), route="solver vs closed form"):
            return out
    return out


check("type-a/full-gf", "Type A: solver, chain-sum closed form and census agree", INTERNAL)(
    lambda ctx: _full_gf(ctx, CornerKind.A)
)
check("type-a/weighted-gf", "Type A: numeric mark weights agree with the weighted census", INTERNAL)(
    lambda ctx: _weighted_gf(ctx, CornerKind.A)
)
check("type-a/unmarked-collapse", "Type A: all marks 1 gives (1-x)/(1-x-xy) and a zero kernel", INTERNAL)(
    lambda ctx: _unmarked_collapse(ctx, CornerKind.A)
)
check("type-a/restricted-gf", "Type A: height-restricted solver, closed form and census agree", INTERNAL)(
    lambda ctx: _restricted_gf(ctx, CornerKind.A)
)
check("type-a/first-height", "Type A: first-height series from chain sums equal the solver's", INTERNAL)(
    lambda ctx: _first_height(ctx, CornerKind.A)
)
check("type-a/setpart-product", "Type A: set-partition product gives Stirling numbers and corner totals", INTERNAL)(
    lambda ctx: _setpart_product(ctx, CornerKind.A)
)
check("type-b/full-gf", "Type B: solver, chain-sum closed form and census agree", INTERNAL)(
    lambda ctx: _full_gf(ctx, CornerKind.B)
)
check("type-b/weighted-gf", "Type B: numeric mark weights agree with the weighted census", INTERNAL)(
    lambda ctx: _weighted_gf(ctx, CornerKind.B)
)
check("type-b/unmarked-collapse", "Type B: all marks 1 gives (1-x)/(1-x-xy) and a zero kernel", INTERNAL)(
    lambda ctx: _unmarked_collapse(ctx, CornerKind.B)
)
check("type-b/restricted-gf", "Type B: height-restricted solver, closed form and census agree", INTERNAL)(
    lambda ctx: _restricted_gf(ctx, CornerKind.B)
)
check("type-b/first-height", "Type B: first-height series from chain sums equal the solver's", INTERNAL)(
    lambda ctx: _first_height(ctx, CornerKind.B)
)
check("type-b/setpart-product", "Type B: set-partition product gives Stirling numbers and corner totals", INTERNAL)(
    lambda ctx: _setpart_product(ctx, CornerKind.B)
)


# ─────────────────────────────────────────────────────────────────────────────
# Printed displays shared by both types
# ─────────────────────────────────────────────────────────────────────────────

def _against_totals(ctx: SuiteContext, kind: CornerKind, series: TruncatedSeries) -> Outcome:
    out = Outcome(ranges=_oracle_caps(ctx))
    expected = restrict(ctx.bargraphs.totals(kind), (ctx.oracle_cap, ctx.config.ycap))
    out.note(first_discrepancy(expected, series_table(series.truncate(ctx.oracle_cap, ctx.config.ycap))))
    return out


def _against_totals_by_n(ctx: SuiteContext, kind: CornerKind, series: TruncatedSeries) -> Outcome:
    out = Outcome(ranges={"cells": f"0..{ctx.oracle_cap}"})
    census = ctx.bargraphs
    expected = {(n,): c for n, c in census.by_n(census.totals(kind)).items()}
    out.note(first_discrepancy(expected, univariate_table(series)))
    return out


def _vw_against_census(
    ctx: SuiteContext, kind: CornerKind, build: Callable[[int, int], TruncatedSeries], by_n: bool
) -> Outcome:
    out = Outcome(ranges={**_oracle_caps(ctx), "vw": f"1..{ctx.config.vw_max}"})
    census = ctx.bargraphs
    for v, w in ctx.vw_pairs():
        table = census.per_ab_table(kind, v, w)
        series = build(v, w)
        if by_n:
            expected = {(n,): c for n, c in census.by_n(table).items()}
            got = univariate_table(series)
        else:
            bounds = (ctx.oracle_cap, ctx.config.ycap)
            expected = restrict(table, bounds)
            got = series_table(series.truncate(*bounds))
        if out.note(first_discrepancy(expected, got, prefix=(v, w))):
            return out
    return out


def _vw_display(ctx: SuiteContext, kind: CornerKind) -> Outcome:
    cfg = ctx.config
    out = Outcome(ranges={**_caps(ctx), "vw": f"1..{cfg.vw_max}"})
    for v, w in ctx.vw_pairs():
        marking = Marking.single(v, w)
        if kind is CornerKind.A:
            truth = solve_system_a(cfg.xcap, cfg.ycap, marking).H
            display = printed_a.vw_display_a(v, w, cfg.xcap, cfg.ycap, marking)
        else:
            truth = solve_system_b(cfg.xcap, cfg.ycap, marking).J
            display = printed_b.vw_display_b(v, w, cfg.xcap, cfg.ycap, marking)
        if out.note(compare_series(truth, display, prefix=(v, w))):
            return out
    return out


def _all_marks_display(ctx: SuiteContext, kind: CornerKind) -> Outcome:
    cfg = ctx.config
    out = Outcome(ranges={**_caps(ctx), "marks": "1+eps, 2"})
    for marking in (Marking.all(), Marking.all(2)):
        if kind is CornerKind.A:
            truth = solve_system_a(cfg.xcap, cfg.ycap, marking).H
            display = printed_a.all_marks_display_a(cfg.xcap, cfg.ycap, marking)
        else:
            truth = solve_system_b(cfg.xcap, cfg.ycap, marking).J
            display = printed_b.all_marks_display_b(cfg.xcap, cfg.ycap, marking)
        if out.note(compare_series(truth, display), marking=marking.describe()):
            return out
    return out


def _setpart_display(
    ctx: SuiteContext, kind: CornerKind, build: Callable[[int, int], TruncatedSeries]
) -> Outcome:
    cfg = ctx.config
    cols = cfg.closed_columns_max
    product = setpart_a.pk_series_a if kind is CornerKind.A else setpart_b.pk_series_b
    out = Outcome(ranges={"blocks": f"1..{cfg.closed_blocks_max}", "t_degree": f"0..{cols}"})
    for k in range(1, cfg.closed_blocks_max + 1):
        expected = univariate_table(product(k, cols), "deriv")
        if out.note(first_discrepancy(expected, univariate_table(build(k, cols)), part="deriv", prefix=(k,))):
            return out
    return out


def _setpart_bivariate_display(ctx: SuiteContext, kind: CornerKind) -> Outcome:
    cfg = ctx.config
    xcap, ycap = cfg.xcap, min(cfg.ycap, cfg.closed_columns_max)
    blocks = min(cfg.closed_blocks_max, 4)
    out = Outcome(ranges={"xcap": str(xcap), "ycap": str(ycap), "blocks": f"1..{blocks}"})
    for k in range(1, blocks + 1):
        if kind is CornerKind.A:
            truth = setpart_a.pk_series_a_bivariate(k, xcap, ycap)
            display = setpart_a.qk_product_display_a(k, xcap, ycap)
        else:
            truth = setpart_b.pk_series_b_bivariate(k, xcap, ycap)
            display = setpart_b.qk_product_display_b(k, xcap, ycap)
        if out.note(first_discrepancy(series_table(truth, "deriv"), series_table(display), part="deriv", prefix=(k,))):
            return out
    return out


def _blocks_table(ctx: SuiteContext, kind: CornerKind, shift: int, k_extra: int) -> dict[tuple[int, int], int]:
    """Census totals at ground-set size n + shift >= 1, for 0 <= k <= n + shift + k_extra."""
    totals = ctx.setpartitions.totals(kind)
    top = ctx.config.setpart_n_max - shift
    return {
        (n, k): totals.get((n + shift, k), 0)
        for n in range(max(0, 1 - shift), top + 1)
        for k in range(n + shift + k_extra + 1)
    }


def _setpart_formula(
    ctx: SuiteContext, kind: CornerKind, formula: Callable[[int, int], Fraction], shift: int, k_extra: int
) -> Outcome:
    expected = _blocks_table(ctx, kind, shift, k_extra)
    got = {key: formula(*key) for key in expected}
    top = ctx.config.setpart_n_max - shift
    out = Outcome(ranges={"n": f"0..{top}", "ground_set": f"n+{shift}"})
    discrepancy = first_discrepancy(expected, got)
    if discrepancy is not None:
        mismatches = all_mismatches(expected, got)
        out.note(discrepancy, mismatches=" ".join(f"({n},{k})" for n, k in mismatches))
    return out


def _setpart_bell(ctx: SuiteContext, kind: CornerKind, formula: Callable[[int], Fraction]) -> Outcome:
    census = ctx.setpartitions
    by_n = census.by_n(census.totals(kind))
    top = ctx.config.setpart_n_max - 1
    expected = {(n,): by_n.get(n + 1, 0) for n in range(top + 1)}
    got = {(n,): formula(n) for n in range(top + 1)}
    out = Outcome(ranges={"n": f"0..{top}", "ground_set": "n+1"})
    out.note(first_discrepancy(expected, got))
    return out


# ─────────────────────────────────────────────────────────────────────────────
# Printed displays, type A
# ─────────────────────────────────────────────────────────────────────────────

check("type-a/all-marks-display", "Type A: all-marks series as a single sum over s", PRINTED)(
    lambda ctx: _all_marks_display(ctx, CornerKind.A)
)
check("type-a/total-gf", "Type A: G(x,y) = y^2x^3/((1-x-xy)^2(1+x))", PRINTED)(
    lambda ctx: _against_totals(ctx, CornerKind.A, printed_a.gf_total_a(ctx.oracle_cap, ctx.config.ycap))
)
check("type-a/total-gf-x1", "Type A: G(x,1) = x^3/((1-2x)(1+x))", PRINTED)(
    lambda ctx: _against_totals_by_n(ctx, CornerKind.A, printed_a.gf_total_a_x1(ctx.oracle_cap))
)


@check("type-a/total-closed", "Type A: g_n = ((n+1)/12 - 2/9)2^n - (1/9)(-1)^n", PRINTED)
def _total_closed(ctx: SuiteContext) -> Outcome:
    census = ctx.bargraphs
    by_n = census.by_n(census.totals(CornerKind.A))
    expected = {(n,): by_n.get(n, 0) for n in range(1, ctx.oracle_cap + 1)}
    got = {(n,): printed_a.closed_g_n(n) for n in range(1, ctx.oracle_cap + 1)}
    out = Outcome(ranges={"cells": f"1..{ctx.oracle_cap}"})
    out.note(first_discrepancy(expected, got))
    return out


check("type-a/vw-display", "Type A: single (v,w) series with the product over (1-x^(j+lv)y)", PRINTED)(
    lambda ctx: _vw_display(ctx, CornerKind.A)
)
check("type-a/vw-gf", "Type A: T(x,y) for (v,w)-corners", PRINTED)(
    lambda ctx: _vw_against_census(
        ctx, CornerKind.A, lambda v, w: printed_a.gf_vw_a(v, w, ctx.oracle_cap, ctx.config.ycap), by_n=False
    )
)
check("type-a/vw-gf-x1", "Type A: T(x,1) for (v,w)-corners", PRINTED)(
    lambda ctx: _vw_against_census(ctx, CornerKind.A, lambda v, w: printed_a.gf_vw_a_x1(v, w, ctx.oracle_cap), by_n=True)
)


@check("type-a/vw-corollary", "Type A: t_n = n 2^(w-v+n-1)/((2^(w+1)-1)(2^(w+2)-1))", PRINTED)
def _vw_corollary(ctx: SuiteContext) -> Outcome:
    census = ctx.bargraphs
    n_hi = ctx.oracle_cap
    window = ctx.config.asymptotic_window
    out = Outcome(
        ranges={"cells": f"v+w+1..{n_hi}", "vw": f"1..{ctx.config.vw_max}", "window": f"{n_hi - window}..{n_hi}"}
    )
    asymptotic = True
    for v, w in ctx.vw_pairs():
        exact = census.by_n(census.per_ab_table(CornerKind.A, v, w))
        support = range(v + w + 1, n_hi + 1)
        formula = {n: printed_a.corollary_t_n(v, w, n) for n in support}
        expected = {(n,): exact.get(n, 0) for n in support}
        out.note(first_discrepancy(expected, {(n,): formula[n] for n in support}, prefix=(v, w)))
        ratios = window_ratios(exact, formula, n_hi, window)
        asymptotic = asymptotic and is_asymptotic(ratios)
        out.diagnostics[f"ratios_{v}_{w}"] = "none" if ratios is None else " ".join(str(r) for r in ratios)
    out.asymptotic = asymptotic
    return out


@check("type-a/restricted-h1", "Type A: H^(1) = xy/(1-xy), read with the empty bargraph added", PRINTED)
def _restricted_h1(ctx: SuiteContext) -> Outcome:
    cfg = ctx.config
    out = Outcome(ranges=_caps(ctx), diagnostics={"reading": "1 + display"})
    truth = solve_system_a(cfg.xcap, cfg.ycap, Marking.all(), hmax=1).H
    out.note(compare_series(truth, 1 + printed_a.restricted_h1_a(cfg.xcap, cfg.ycap)))
    return out


@check("type-a/restricted-h2", "Type A: H^(2) with the plateau sum over q(1,m)", PRINTED)
def _restricted_h2(ctx: SuiteContext) -> Outcome:
    cfg = ctx.config
    out = Outcome(ranges={**_caps(ctx), "markings": "unmarked, all"})
    for marking in (Marking.unmarked(), Marking.all()):
        truth = solve_system_a(cfg.xcap, cfg.ycap, marking, hmax=2).H
        if out.note(compare_series(truth, printed_a.restricted_h2_a(cfg.xcap, cfg.ycap, marking)), marking=marking.describe()):
            break
    return out


check("type-a/setpart-product-display", "Type A: Q_k(x,y) as a product times a sum over N", PRINTED)(
    lambda ctx: _setpart_bivariate_display(ctx, CornerKind.A)
)
check("type-a/setpart-sum-form", "Type A: Q_k(1,t) as phi times a sum over N = 2..k", PRINTED)(
    lambda ctx: _setpart_display(ctx, CornerKind.A, setpart_a.qk_sum_form_a)
)
check("type-a/setpart-closed", "Type A: Q_k(1,t) in terms of phi and phi'", PRINTED)(
    lambda ctx: _setpart_display(ctx, CornerKind.A, setpart_a.qk_closed_a)
)
check("type-a/setpart-egf-blocks", "Type A: exponential form of Q_k via Stirling numbers", PRINTED)(
    lambda ctx: _setpart_formula(ctx, CornerKind.A, setpart_a.egf_block_total_a, shift=0, k_extra=0)
)
check("type-a/setpart-egf-derivative", "Type A: time derivative of the exponential form", PRINTED)(
    lambda ctx: _setpart_formula(ctx, CornerKind.A, setpart_a.egf_time_derivative_a, shift=1, k_extra=1)
)
check("type-a/setpart-total-printed", "Type A: total over partitions of [n+1] with k blocks, final term S(n,k-2)", PRINTED)(
    lambda ctx: _setpart_formula(ctx, CornerKind.A, lambda n, k: setpart_a.setpart_total_a(n, k).printed, 1, 1)
)
check("type-a/setpart-total-derived", "Type A: same total with final term S(n,k-2)/4", PRINTED)(
    lambda ctx: _setpart_formula(ctx, CornerKind.A, lambda n, k: setpart_a.setpart_total_a(n, k).derived, 1, 1)
)
check("type-a/setpart-bell-printed", "Type A: total over partitions of [n+1], Bell form with -(n-2)/2 B_n", PRINTED)(
    lambda ctx: _setpart_bell(ctx, CornerKind.A, lambda n: setpart_a.setpart_bell_a(n).printed)
)
check("type-a/setpart-bell-derived", "Type A: Bell form with -(2n-1)/4 B_n", PRINTED)(
    lambda ctx: _setpart_bell(ctx, CornerKind.A, lambda n: setpart_a.setpart_bell_a(n).derived)
)


# ─────────────────────────────────────────────────────────────────────────────
# Printed displays, type B
# ─────────────────────────────────────────────────────────────────────────────

@check("type-b/all-marks-chain-sum", "Type B: Gamma_j for equal marks as a quotient by (1-x)...(1-x^(s+1))", PRINTED)
def _all_marks_chain_sum(ctx: SuiteContext) -> Outcome:
    cfg = ctx.config
    out = Outcome(ranges={**_caps(ctx), "marks": "1+eps, 2"})
    for marking in (Marking.all(), Marking.all(2)):
        chains = chain_sums_b(cfg.xcap, cfg.ycap, marking, cfg.xcap)
        for j in range(1, cfg.xcap + 1):
            display = printed_b.all_marks_chain_display_b(j, cfg.xcap, cfg.ycap, marking)
            if out.note(compare_series(chains.total(j), display, prefix=(j,)), marking=marking.describe()):
                return out
    return out


check("type-b/all-marks-display", "Type B: all-marks series with Gamma_j summed over j", PRINTED)(
    lambda ctx: _all_marks_display(ctx, CornerKind.B)
)
check("type-b/total-gf", "Type B: H(x,y) = xy(1-x-xy+x^2y^2)/(1-x-xy)^2", PRINTED)(
    lambda ctx: _against_totals(ctx, CornerKind.B, printed_b.gf_total_b_printed(ctx.oracle_cap, ctx.config.ycap))
)
check("type-b/total-gf-x1", "Type B: H(x,1) = x(x-1)^2/(1-2x)^2", PRINTED)(
    lambda ctx: _against_totals_by_n(ctx, CornerKind.B, printed_b.gf_total_b_x1_printed(ctx.oracle_cap))
)


@check("type-b/vw-chain-sum", "Type B: Gamma_j for a single (v,w) as one monomial times a product", PRINTED)
def _vw_chain_sum(ctx: SuiteContext) -> Outcome:
    cfg = ctx.config
    out = Outcome(ranges={**_caps(ctx), "vw": f"1..{cfg.vw_max}"})
    for v, w in ctx.vw_pairs():
        marking = Marking.single(v, w)
        chains = chain_sums_b(cfg.xcap, cfg.ycap, marking, cfg.xcap)
        for j in range(1, cfg.xcap + 1):
            display = printed_b.vw_chain_display_b(v, w, j, cfg.xcap, cfg.ycap, marking)
            if out.note(compare_series(chains.total(j), display, prefix=(v, w, j))):
                return out
    return out


check("type-b/vw-display", "Type B: single (v,w) series built from the displayed Gamma_j", PRINTED)(
    lambda ctx: _vw_display(ctx, CornerKind.B)
)
check("type-b/vw-gf", "Type B: T(x,y) for (v,w)-corners", PRINTED)(
    lambda ctx: _vw_against_census(
        ctx, CornerKind.B, lambda v, w: printed_b.gf_vw_b_printed(v, w, ctx.oracle_cap, ctx.config.ycap), by_n=False
    )
)
check("type-b/vw-gf-x1", "Type B: T(x,1) for (v,w)-corners", PRINTED)(
    lambda ctx: _vw_against_census(
        ctx, CornerKind.B, lambda v, w: printed_b.gf_vw_b_x1_printed(v, w, ctx.oracle_cap), by_n=True
    )
)


@check("type-b/restricted-j1", "Type B: J^(1) = 1 + sum x^m y^m p(m,1)", PRINTED)
def _restricted_j1(ctx: SuiteContext) -> Outcome:
    cfg = ctx.config
    out = Outcome(ranges=_caps(ctx))
    truth = solve_system_b(cfg.xcap, cfg.ycap, Marking.all(), hmax=1).J
    out.note(compare_series(truth, printed_b.restricted_j1_b(cfg.xcap, cfg.ycap, Marking.all())))
    return out


def _restricted_derivative(ctx: SuiteContext, first_height: bool) -> Outcome:
    cfg = ctx.config
    out = Outcome(ranges={**_caps(ctx), "height_bounds": ",".join(map(str, RESTRICTED_HEIGHTS))})
    for N in RESTRICTED_HEIGHTS:
        solved = solve_system_b(cfg.xcap, cfg.ycap, Marking.all(), hmax=N)
        if first_height:
            truth = solved.J_a[N]
            display = printed_b.first_height_derivative_display_b(N, cfg.xcap, cfg.ycap)
        else:
            truth = solved.J
            display = printed_b.restricted_derivative_display_b(N, cfg.xcap, cfg.ycap)
        if out.note(first_discrepancy(series_table(truth, "deriv"), series_table(display), part="deriv", prefix=(N,))):
            return out
    return out


check("type-b/restricted-derivative", "Type B: derivative of J^(N) at p = 1", PRINTED)(
    lambda ctx: _restricted_derivative(ctx, first_height=False)
)
check("type-b/restricted-first-height-derivative", "Type B: derivative of J_N^(N) at p = 1", PRINTED)(
    lambda ctx: _restricted_derivative(ctx, first_height=True)
)


@check("type-b/restricted-first-height-derivative-x1", "Type B: derivative of J_N^(N) at p = 1 and x = 1", PRINTED)
def _restricted_first_height_x1(ctx: SuiteContext) -> Outcome:
    tcap = ctx.config.closed_columns_max
    out = Outcome(ranges={"t_degree": f"0..{tcap}", "height_bounds": ",".join(map(str, RESTRICTED_HEIGHTS))})
    for N in RESTRICTED_HEIGHTS:
        factor = solve_system_b(N * tcap, tcap, Marking.all(), hmax=N).J_a[N].at_x_one()
        display = printed_b.first_height_derivative_x1_display_b(N, tcap)
        if out.note(first_discrepancy(univariate_table(factor, "deriv"), univariate_table(display), part="deriv", prefix=(N,))):
            return out
    return out


check("type-b/setpart-product-display", "Type B: Q_k(x,y) with the p^(1-k) correction", PRINTED)(
    lambda ctx: _setpart_bivariate_display(ctx, CornerKind.B)
)
check("type-b/setpart-sum-form", "Type B: Q_k(1,t) as phi times 1-k plus a sum over N", PRINTED)(
    lambda ctx: _setpart_display(ctx, CornerKind.B, setpart_b.qk_sum_form_b)
)
check("type-b/setpart-closed", "Type B: Q_k(1,t) = phi (1 + t/2 C(k,2) + t/2 sum (N-1)/(1-Nt))", PRINTED)(
    lambda ctx: _setpart_display(ctx, CornerKind.B, setpart_b.qk_closed_b)
)
check("type-b/setpart-egf-blocks", "Type B: exponential form of Q_k via Stirling numbers", PRINTED)(
    lambda ctx: _setpart_formula(ctx, CornerKind.B, setpart_b.egf_block_total_b, shift=0, k_extra=0)
)
check("type-b/setpart-egf-derivative", "Type B: time derivative of the exponential form", PRINTED)(
    lambda ctx: _setpart_formula(ctx, CornerKind.B, setpart_b.egf_time_derivative_b, shift=1, k_extra=1)
)
check("type-b/setpart-total-printed", "Type B: total over partitions of [n+1] with k blocks, final term S(n,k-2)", PRINTED)(
    lambda ctx: _setpart_formula(ctx, CornerKind.B, lambda n, k: setpart_b.setpart_total_b(n, k).printed, 1, 1)
)
check("type-b/setpart-total-derived", "Type B: same total with final term S(n,k-2)/4", PRINTED)(
    lambda ctx: _setpart_formula(ctx, CornerKind.B, lambda n, k: setpart_b.setpart_total_b(n, k).derived, 1, 1)
)
check("type-b/setpart-bell-printed", "Type B: total over partitions of [n+1], Bell form with -(n-2)/2 B_n", PRINTED)(
    lambda ctx: _setpart_bell(ctx, CornerKind.B, lambda n: setpart_b.setpart_bell_b(n).printed)
)
check("type-b/setpart-bell-derived", "Type B: Bell form with -(2n-1)/4 B_n", PRINTED)(
    lambda ctx: _setpart_bell(ctx, CornerKind.B, lambda n: setpart_b.setpart_bell_b(n).derived)
)


FORMULA_IDS: tuple[str, ...] = tuple(c.formula_id for c in _REGISTRY)


# ─────────────────────────────────────────────────────────────────────────────
# Entry point
# ─────────────────────────────────────────────────────────────────────────────

def _status(outcome: Outcome) -> CheckStatus:
    if outcome.discrepancy is None:
        return CheckStatus.MATCH
    if outcome.asymptotic:
        return CheckStatus.ASYMPTOTIC_ONLY
    return CheckStatus.MISMATCH


def run_suite(
    xcap: int | None = None,
    ycap: int | None = None,
    setpart_n_max: int | None = None,
    vw_max: int | None = None,
    *,
    settings: Settings | None = None,
    only: tuple[str, ...] | None = None,
) -> list[CheckResult]:
    settings = settings or get_settings()
    config = SuiteConfig.from_settings(settings, xcap=xcap, ycap=ycap, setpart_n_max=setpart_n_max, vw_max=vw_max)
    settings.check_caps(config.xcap, config.ycap)
    settings.check_setpart(config.setpart_n_max)
    settings.check_blocks(max(config.blocks_max, config.closed_blocks_max))
    if config.vw_max < 1 or config.setpart_n_max < 1:
        raise UsageError("vw_max and setpart_n_max must be positive")
    unknown = set(only or ()) - set(FORMULA_IDS)
    if unknown:
        raise UsageError(f"unknown formula ids: {', '.join(sorted(unknown))}")

    ctx = SuiteContext(config, settings)
    results = []
    for entry in _REGISTRY:
        if only and entry.formula_id not in only:
            continue
        with timed(logger, "check_finished", formula_id=entry.formula_id) as fields:
            outcome = entry.run(ctx)
            fields["status"] = _status(outcome).value
        result = CheckResult(
            formula_id=entry.formula_id,
            title=entry.title,
            kind=entry.kind,
            status=_status(outcome),
            first_discrepancy=outcome.discrepancy,
            ranges_checked=outcome.ranges,
            diagnostics=outcome.diagnostics,
        )
        results.append(result)
    return results
