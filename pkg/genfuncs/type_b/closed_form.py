"""
Closed-form type B series from chain sums.

    J   = 1 + Σ_{j<=N} (1 + Γ_j)(1 - x^j y) γ_j / (1 - y Σ_{j<=N} x^j - Σ_{j<=N} x^j y Γ_j)
    J_a = (x^a y + Σ_{j<a} x^j y Γ_{a,j})(J - 1) + (1 - x^a y) γ_a + Σ_{j<a} Γ_{a,j} (1 - x^j y) γ_j

Γ_j sums μ-chains starting at j and Γ_{a,j} those pinned to end at a.
"""
from __future__ import annotations

from functools import lru_cache

from algebra.series import SeriesRing, TruncatedSeries
from genfuncs.chains import ChainSums
from genfuncs.marking import Marking
from genfuncs.type_b.kernels import closed_plateau_series, drop_kernel


@lru_cache(maxsize=64)
def chain_sums_b(xcap: int, ycap: int, marking: Marking, top: int) -> ChainSums:
    return ChainSums(lambda a, b: drop_kernel(a, b, marking, xcap, ycap), top, xcap, ycap)


def _top(xcap: int, hmax: int | None) -> int:
    return xcap if hmax is None else min(hmax, xcap)


@lru_cache(maxsize=64)
def closed_form_b(
    xcap: int, ycap: int, marking: Marking | None = None, hmax: int | None = None
) -> TruncatedSeries:
    marking = marking or Marking.unmarked()
    r = SeriesRing(xcap, ycap)
    top = _top(xcap, hmax)
    chains = chain_sums_b(xcap, ycap, marking, top)
    numerator = r.zero()
    denominator = r.one()
    for j in range(1, top + 1):
        gamma = chains.total(j)
        numerator = numerator + (1 + gamma).mul(closed_plateau_series(j, marking, xcap, ycap))
        column = r.mono(j, 1)
        denominator = denominator - column - column.mul(gamma)
    return 1 + numerator / denominator


def closed_form_first_height_b(
    a: int, xcap: int, ycap: int, marking: Marking | None = None, hmax: int | None = None
) -> TruncatedSeries:
    """J_a: bargraphs whose first column has height a."""
    marking = marking or Marking.unmarked()
    r = SeriesRing(xcap, ycap)
    top = _top(xcap, hmax)
    if a < 1 or a > top:
        return r.zero()
    chains = chain_sums_b(xcap, ycap, marking, top)
    lead = r.mono(a, 1)
    rest = closed_plateau_series(a, marking, xcap, ycap)
    for j in range(1, a):
        pinned = chains.pinned_total(j, a)
        lead = lead + r.mono(j, 1).mul(pinned)
        rest = rest + pinned.mul(closed_plateau_series(j, marking, xcap, ycap))
    tail = closed_form_b(xcap, ycap, marking, hmax) - 1
    return lead.mul(tail) + rest
