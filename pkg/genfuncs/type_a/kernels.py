"""
Kernels of the type A system.

Splitting a bargraph after its first column of height ``a`` gives

    H_a = x^a y H + Σ_{b<a} β(a, b) H_b

where ``α(a, b) = Σ_{m>=1} x^(a+b(m-1)) y^m q(a-b, m)`` collects the plateau of
height b reached by a descent of ``a-b`` and ``β(a, b) = α(a, b)(1 - x^b y) - x^a y``.
β vanishes when the descent's mark is 1 and has x-order at least a.
"""
from __future__ import annotations

from functools import lru_cache

from algebra.series import TruncatedSeries
from genfuncs.marking import Marking


@lru_cache(maxsize=4096)
def plateau_series(a: int, b: int, marking: Marking, xcap: int, ycap: int) -> TruncatedSeries:
    """α(a, b)."""
    coeffs = {}
    m = 1
    while m <= ycap and a + b * (m - 1) <= xcap:
        coeffs[(a + b * (m - 1), m)] = marking.factor(a - b, m)
        m += 1
    return TruncatedSeries(xcap, ycap, coeffs)


@lru_cache(maxsize=4096)
def descent_kernel(a: int, b: int, marking: Marking, xcap: int, ycap: int) -> TruncatedSeries:
    """β(a, b) for ``a > b``."""
    alpha = plateau_series(a, b, marking, xcap, ycap)
    closing = TruncatedSeries(xcap, ycap, {(0, 0): 1, (b, 1): -1})
    return alpha.mul(closing).sub(TruncatedSeries.monomial(a, 1, xcap=xcap, ycap=ycap))
