"""
Kernels of the type B system.

For bargraphs starting with height a:

    J_a = θ_a + Σ_{b<a} μ(a, b) J_b,     θ_a = x^a y (J - 1) + (1 - x^a y) γ_a

``γ_a = Σ_m x^(am) y^m p(m, a)`` is the bargraph ``a^m`` (a plateau of m
columns closed by a drop of a) and ``μ(a, b) = (1 - x^a y) Σ_m x^(am) y^m (p(m, a-b) - 1)``
corrects the mark of a plateau followed by a drop of ``a - b``.  Pairs are
``(horizontal run, down run)``.
"""
from __future__ import annotations

from functools import lru_cache

from algebra.series import TruncatedSeries
from genfuncs.marking import Marking


def _closing(a: int, xcap: int, ycap: int) -> TruncatedSeries:
    """1 - x^a y."""
    return TruncatedSeries(xcap, ycap, {(0, 0): 1, (a, 1): -1})


@lru_cache(maxsize=4096)
def plateau_drop_series(a: int, marking: Marking, xcap: int, ycap: int) -> TruncatedSeries:
    """γ_a."""
    coeffs = {}
    m = 1
    while m <= ycap and a * m <= xcap:
        coeffs[(a * m, m)] = marking.factor(m, a)
        m += 1
    return TruncatedSeries(xcap, ycap, coeffs)


@lru_cache(maxsize=4096)
def closed_plateau_series(a: int, marking: Marking, xcap: int, ycap: int) -> TruncatedSeries:
    """(1 - x^a y) γ_a, the mark-dependent part of θ_a."""
    return _closing(a, xcap, ycap).mul(plateau_drop_series(a, marking, xcap, ycap))


@lru_cache(maxsize=4096)
def drop_kernel(a: int, b: int, marking: Marking, xcap: int, ycap: int) -> TruncatedSeries:
    """μ(a, b) for ``a > b``."""
    coeffs = {}
    m = 1
    while m <= ycap and a * m <= xcap:
        coeffs[(a * m, m)] = marking.excess(m, a - b)
        m += 1
    excess = TruncatedSeries(xcap, ycap, coeffs)
    return _closing(a, xcap, ycap).mul(excess)
