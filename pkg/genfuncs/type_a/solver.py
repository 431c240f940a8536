"""
Order-by-order solution of the type A system.

``H = 1 + Σ_a H_a`` and ``H_a = x^a y H + Σ_{b<a} β(a, b) H_b``.  Every
``H_a`` and every ``β(a, b)`` has x-order at least a >= 1, so the x^n row of
each ``H_a`` only needs rows of ``H`` and ``H_b`` below n.  With ``hmax = N``
only ``a <= N`` take part, which counts bargraphs of height at most N.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from algebra.jet import Coefficient
from algebra.series import TruncatedSeries
from genfuncs.marking import Marking
from genfuncs.type_a.kernels import descent_kernel
from utils.errors import UsageError
from utils.logging import get_logger

logger = get_logger(__name__)

Row = dict[int, Coefficient]


@dataclass(frozen=True)
class SystemSolutionA:
    H: TruncatedSeries
    H_a: dict[int, TruncatedSeries]
    marking: Marking
    hmax: int | None


def _accumulate(target: Row, left: Row, right: Row, ycap: int) -> None:
    for j1, c1 in left.items():
        for j2, c2 in right.items():
            j = j1 + j2
            if j <= ycap:
                target[j] = target.get(j, 0) + c1 * c2


def _clean(row: Row) -> Row:
    return {j: c for j, c in row.items() if c}


@lru_cache(maxsize=128)
def solve_system_a(
    xcap: int, ycap: int, marking: Marking | None = None, hmax: int | None = None
) -> SystemSolutionA:
    marking = marking or Marking.unmarked()
    if xcap < 0 or ycap < 0:
        raise UsageError(f"caps must be non-negative, got ({xcap}, {ycap})")
    if hmax is not None and hmax < 1:
        raise UsageError(f"height bound must be positive, got {hmax}")
    top = xcap if hmax is None else min(hmax, xcap)

    kernel_rows: dict[tuple[int, int], list[tuple[int, Row]]] = {}
    for a in range(2, top + 1):
        for b in range(1, a):
            rows = descent_kernel(a, b, marking, xcap, ycap).rows()
            if rows:
                kernel_rows[(a, b)] = sorted(rows.items())

    h_rows: list[Row] = [{0: 1}]
    ha_rows: dict[int, dict[int, Row]] = {a: {} for a in range(1, top + 1)}
    for n in range(1, xcap + 1):
        total: Row = {}
        for a in range(1, min(n, top) + 1):
            row: Row = {j + 1: c for j, c in h_rows[n - a].items() if j + 1 <= ycap}
            for b in range(1, a):
                for k, krow in kernel_rows.get((a, b), ()):
                    if n - k < b:
                        break
                    hb = ha_rows[b].get(n - k)
                    if hb:
                        _accumulate(row, krow, hb, ycap)
            row = _clean(row)
            if row:
                ha_rows[a][n] = row
                for j, c in row.items():
                    total[j] = total.get(j, 0) + c
        h_rows.append(_clean(total))

    H = TruncatedSeries.from_rows(dict(enumerate(h_rows)), xcap, ycap)
    H_a = {a: TruncatedSeries.from_rows(rows, xcap, ycap) for a, rows in ha_rows.items()}
    logger.debug("system_solved", kind="A", xcap=xcap, ycap=ycap, marking=marking.describe(), hmax=hmax)
    return SystemSolutionA(H=H, H_a=H_a, marking=marking, hmax=hmax)
