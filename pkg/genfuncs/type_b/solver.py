"""
Order-by-order solution of the type B system.

``J = 1 + Σ_a J_a`` with ``J_a = x^a y (J - 1) + (1 - x^a y) γ_a + Σ_{b<a} μ(a, b) J_b``.
``J - 1``, ``γ_a`` and ``μ(a, b)`` all have positive x-order (at least a for
the last two), so rows are filled by increasing x-degree exactly as for
type A.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from algebra.jet import Coefficient
from algebra.series import TruncatedSeries
from genfuncs.marking import Marking
from genfuncs.type_b.kernels import closed_plateau_series, drop_kernel
from utils.errors import UsageError
from utils.logging import get_logger

logger = get_logger(__name__)

Row = dict[int, Coefficient]


@dataclass(frozen=True)
class SystemSolutionB:
    J: TruncatedSeries
    J_a: dict[int, TruncatedSeries]
    marking: Marking
    hmax: int | None


@lru_cache(maxsize=128)
def solve_system_b(
    xcap: int, ycap: int, marking: Marking | None = None, hmax: int | None = None
) -> SystemSolutionB:
    marking = marking or Marking.unmarked()
    if xcap < 0 or ycap < 0:
        raise UsageError(f"caps must be non-negative, got ({xcap}, {ycap})")
    if hmax is not None and hmax < 1:
        raise UsageError(f"height bound must be positive, got {hmax}")
    top = xcap if hmax is None else min(hmax, xcap)

    fixed_rows = {a: closed_plateau_series(a, marking, xcap, ycap).rows() for a in range(1, top + 1)}
    kernel_rows: dict[tuple[int, int], list[tuple[int, Row]]] = {}
    for a in range(2, top + 1):
        for b in range(1, a):
            rows = drop_kernel(a, b, marking, xcap, ycap).rows()
            if rows:
                kernel_rows[(a, b)] = sorted(rows.items())

    # rows of J - 1
    tail_rows: list[Row] = [{}]
    ja_rows: dict[int, dict[int, Row]] = {a: {} for a in range(1, top + 1)}
    for n in range(1, xcap + 1):
        total: Row = {}
        for a in range(1, min(n, top) + 1):
            row: Row = {j + 1: c for j, c in tail_rows[n - a].items() if j + 1 <= ycap}
            for j, c in fixed_rows[a].get(n, {}).items():
                row[j] = row.get(j, 0) + c
            for b in range(1, a):
                for k, krow in kernel_rows.get((a, b), ()):
                    if n - k < b:
                        break
                    jb = ja_rows[b].get(n - k)
                    if not jb:
                        continue
                    for j1, c1 in krow.items():
                        for j2, c2 in jb.items():
                            if j1 + j2 <= ycap:
                                row[j1 + j2] = row.get(j1 + j2, 0) + c1 * c2
            row = {j: c for j, c in row.items() if c}
            if row:
                ja_rows[a][n] = row
                for j, c in row.items():
                    total[j] = total.get(j, 0) + c
        tail_rows.append({j: c for j, c in total.items() if c})

    rows = dict(enumerate(tail_rows))
    rows[0] = {0: 1}
    J = TruncatedSeries.from_rows(rows, xcap, ycap)
    J_a = {a: TruncatedSeries.from_rows(r, xcap, ycap) for a, r in ja_rows.items()}
    logger.debug("system_solved", kind="B", xcap=xcap, ycap=ycap, marking=marking.describe(), hmax=hmax)
    return SystemSolutionB(J=J, J_a=J_a, marking=marking, hmax=hmax)
