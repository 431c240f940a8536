"""
Closed-form type A series from chain sums.

    H = 1 / (1 - y Σ_{j<=N} x^j - Σ_{j<=N} x^j y Σ_s L(j, s))
    H_a = H · (x^a y + Σ_{j<a} x^j y Σ_s L_a(j, s))

with L built from the descent kernel β; N is the height bound (the x-cap when
unbounded).
"""
from __future__ import annotations

from functools import lru_cache

from algebra.series import SeriesRing, TruncatedSeries
from genfuncs.chains import ChainSums
from genfuncs.marking import Marking
from genfuncs.type_a.kernels import descent_kernel


@lru_cache(maxsize=64)
def _chain_sums(xcap: int, ycap: int, marking: Marking, top: int) -> ChainSums:
    return ChainSums(lambda a, b: descent_kernel(a, b, marking, xcap, ycap), top, xcap, ycap)


def _top(xcap: int, hmax: int | None) -> int:
    return xcap if hmax is None else min(hmax, xcap)


@lru_cache(maxsize=64)
def closed_form_a(
    xcap: int, ycap: int, marking: Marking | None = None, hmax: int | None = None
) -> TruncatedSeries:
    marking = marking or Marking.unmarked()
    r = SeriesRing(xcap, ycap)
    top = _top(xcap, hmax)
    chains = _chain_sums(xcap, ycap, marking, top)
    denominator = r.one()
    for j in range(1, top + 1):
        column = r.mono(j, 1)
        denominator = denominator - column - column.mul(chains.total(j))
    return denominator.inverse()


def closed_form_first_height_a(
    a: int, xcap: int, ycap: int, marking: Marking | None = None, hmax: int | None = None
) -> TruncatedSeries:
    """H_a: bargraphs whose first column has height a."""
    marking = marking or Marking.unmarked()
    r = SeriesRing(xcap, ycap)
    top = _top(xcap, hmax)
    if a < 1 or a > top:
        return r.zero()
    chains = _chain_sums(xcap, ycap, marking, top)
    lead = r.mono(a, 1)
    for j in range(1, a):
        lead = lead + r.mono(j, 1).mul(chains.pinned_total(j, a))
    return closed_form_a(xcap, ycap, marking, hmax).mul(lead)
