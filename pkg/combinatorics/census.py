"""
Brute-force corner census.

Every object is enumerated and its corners tallied per ``(n, k)``: cells and
columns for bargraphs, ground-set size and blocks for set partitions.  The
oracle stays deliberately simple; work can be split across processes by
``(n, first column height)`` and the partial tables merged.
"""
from __future__ import annotations

from collections import Counter
from collections.abc import Callable, Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import TYPE_CHECKING

from algebra.jet import Coefficient
from combinatorics.bargraph import Bargraph, corners, enumerate_bargraphs
from combinatorics.setpartition import growth_strings
from utils.config import get_settings
from utils.logging import get_logger, timed
from utils.models import CensusRow, CornerKind

if TYPE_CHECKING:
    from genfuncs.marking import Marking

logger = get_logger(__name__)

Key = tuple[int, int]


@dataclass
class CensusRecord:
    count: int = 0
    total_a: int = 0
    total_b: int = 0
    per_ab_a: Counter[tuple[int, int]] = field(default_factory=Counter)
    per_ab_b: Counter[tuple[int, int]] = field(default_factory=Counter)

    def add_object(self, g: Bargraph) -> None:
        self.count += 1
        for corner in corners(g):
            if corner.kind is CornerKind.A:
                self.total_a += 1
                self.per_ab_a[(corner.a, corner.b)] += 1
            else:
                self.total_b += 1
                self.per_ab_b[(corner.a, corner.b)] += 1

    def merge(self, other: CensusRecord) -> CensusRecord:
        return CensusRecord(
            count=self.count + other.count,
            total_a=self.total_a + other.total_a,
            total_b=self.total_b + other.total_b,
            per_ab_a=self.per_ab_a + other.per_ab_a,
            per_ab_b=self.per_ab_b + other.per_ab_b,
        )

    def total(self, kind: CornerKind) -> int:
        return self.total_a if kind is CornerKind.A else self.total_b

    def per_ab(self, kind: CornerKind) -> Counter[tuple[int, int]]:
        return self.per_ab_a if kind is CornerKind.A else self.per_ab_b


@dataclass
class CensusTable:
    """``(n, k) -> CensusRecord``; k is columns for bargraphs and blocks for set partitions."""

    records: dict[Key, CensusRecord] = field(default_factory=dict)

    def record(self, n: int, k: int) -> CensusRecord:
        return self.records.get((n, k)) or CensusRecord()

    def add_object(self, key: Key, g: Bargraph) -> None:
        self.records.setdefault(key, CensusRecord()).add_object(g)

    def merge(self, other: CensusTable) -> CensusTable:
        merged = dict(self.records)
        for key, rec in other.records.items():
            merged[key] = merged[key].merge(rec) if key in merged else rec
        return CensusTable(merged)

    def keys(self) -> list[Key]:
        return sorted(self.records)

    # ── Tables consumed by the verifier ───────────────────────────────────────

    def counts(self) -> dict[Key, int]:
        return {key: rec.count for key, rec in self.records.items()}

    def totals(self, kind: CornerKind) -> dict[Key, int]:
        return {key: rec.total(kind) for key, rec in self.records.items()}

    def per_ab_table(self, kind: CornerKind, a: int, b: int) -> dict[Key, int]:
        return {key: rec.per_ab(kind)[(a, b)] for key, rec in self.records.items()}

    def by_n(self, table: dict[Key, int]) -> dict[int, int]:
        """Collapse the second index."""
        out: dict[int, int] = {}
        for (n, _), value in table.items():
            out[n] = out.get(n, 0) + value
        return out

    def rows(self) -> list[CensusRow]:
        return [
            CensusRow(
                n=n,
                k=k,
                count=rec.count,
                total_A=rec.total_a,
                total_B=rec.total_b,
                per_ab_A=[(a, b, c) for (a, b), c in sorted(rec.per_ab_a.items())],
                per_ab_B=[(a, b, c) for (a, b), c in sorted(rec.per_ab_b.items())],
            )
            for (n, k), rec in sorted(self.records.items())
        ]


# ─────────────────────────────────────────────────────────────────────────────
# Bargraph census
# ─────────────────────────────────────────────────────────────────────────────

def _bargraph_chunk(n: int, first_height: int | None, hmax: int | None) -> CensusTable:
    table = CensusTable()
    for g in enumerate_bargraphs(n, hmax=hmax, first_height=first_height):
        table.add_object((n, g.columns), g)
    return table


def _bargraph_chunks(n_max: int, hmax: int | None) -> Iterator[tuple[int, int | None, int | None]]:
    yield (0, None, hmax)
    for n in range(1, n_max + 1):
        top = n if hmax is None else min(n, hmax)
        for h in range(1, top + 1):
            yield (n, h, hmax)


def _run_chunks(fn: Callable[..., CensusTable], chunks: list[tuple], workers: int) -> CensusTable:
    table = CensusTable()
    if workers <= 1 or len(chunks) <= 1:
        for chunk in chunks:
            table = table.merge(fn(*chunk))
        return table
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(fn, *zip(*chunks)):
            table = table.merge(part)
    return table


def census_bargraphs(n_max: int, hmax: int | None = None, *, workers: int | None = None) -> CensusTable:
    """Corner census of every bargraph with at most ``n_max`` cells."""
    settings = get_settings()
    settings.check_cells(n_max)
    workers = settings.workers if workers is None else workers
    with timed(logger, "census_complete", kind="bargraphs", n_max=n_max, hmax=hmax, workers=workers) as fields:
        table = _run_chunks(_bargraph_chunk, list(_bargraph_chunks(n_max, hmax)), workers)
        fields["rows"] = len(table.records)
    return table


# ─────────────────────────────────────────────────────────────────────────────
# Set-partition census
# ─────────────────────────────────────────────────────────────────────────────

def _setpartition_chunk(n: int) -> CensusTable:
    table = CensusTable()
    for letters in growth_strings(n):
        table.add_object((n, max(letters, default=0)), Bargraph(letters))
    return table


def census_setpartitions(n_max: int, *, workers: int | None = None) -> CensusTable:
    """Corner census of every set partition of [n], n <= n_max, keyed by (n, blocks)."""
    settings = get_settings()
    settings.check_setpart(n_max)
    workers = settings.workers if workers is None else workers
    with timed(logger, "census_complete", kind="setpartitions", n_max=n_max, workers=workers) as fields:
        table = _run_chunks(_setpartition_chunk, [(n,) for n in range(n_max + 1)], workers)
        fields["rows"] = len(table.records)
    return table


# ─────────────────────────────────────────────────────────────────────────────
# Weighted census
# ─────────────────────────────────────────────────────────────────────────────

def _weighted_total(objects: Iterable[Bargraph], kind: CornerKind, marking: Marking) -> dict[Key, Coefficient]:
    out: dict[Key, Coefficient] = {}
    for g in objects:
        weight: Coefficient = Fraction(1)
        for corner in corners(g):
            if corner.kind is kind:
                weight = weight * marking.factor(corner.a, corner.b)
        key = (g.cells, g.columns)
        out[key] = out.get(key, 0) + weight
    return out


def corner_weight_census(
    n_max: int, kind: CornerKind, marking: Marking, hmax: int | None = None
) -> dict[Key, Coefficient]:
    """``(n, k) -> Σ_π Π_corners mark(a, b)`` over bargraphs: the oracle for numeric marks."""
    get_settings().check_cells(n_max)
    objects = (g for n in range(n_max + 1) for g in enumerate_bargraphs(n, hmax=hmax))
    return _weighted_total(objects, kind, marking)
