"""
Type B corners over set partitions.

``P_k = p^(1-k) Π_{N=1..k} J_N`` (height bound N) with every mark equal to p:
each of the k-1 block openings after the first hides the final-drop corner of
the preceding factor, hence the correction.  With p the jet ``1+ε`` the
correction is ``1 + (1-k)ε``.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb

from algebra.series import SeriesRing, TruncatedSeries
from combinatorics.stirling import bell, stirling
from genfuncs.marking import Marking
from genfuncs.type_a.setpartitions import (
    PrintedDerived,
    egf_block_total_a,
    egf_time_derivative_a,
    setpart_total_a,
    stirling_ogf,
)
from genfuncs.type_b.closed_form import closed_form_first_height_b
from genfuncs.type_b.printed import first_height_derivative_display_b
from genfuncs.type_b.solver import solve_system_b
from utils.errors import UsageError
from utils.logging import get_logger
from utils.models import MarkMode

logger = get_logger(__name__)


def _check(k: int, marking: Marking) -> None:
    if k < 1:
        raise UsageError(f"block count must be positive, got {k}")
    if marking.mode is not MarkMode.ALL:
        raise UsageError("the type B set-partition product needs every mark equal")


# ─────────────────────────────────────────────────────────────────────────────
# Product route
# ─────────────────────────────────────────────────────────────────────────────

def pk_series_b(k: int, ncols_cap: int, marking: Marking | None = None) -> TruncatedSeries:
    """P_k(1, t): value coefficient of t^n is S(n, k), derivative part counts corners."""
    marking = marking or Marking.all()
    _check(k, marking)
    product = TruncatedSeries.one(0, ncols_cap)
    for N in range(1, k + 1):
        factor = solve_system_b(N * ncols_cap, ncols_cap, marking, hmax=N).J_a[N]
        product = product.mul(factor.at_x_one())
    logger.debug("setpartition_product", kind="B", k=k, ncols_cap=ncols_cap)
    return product.scale(marking.mark_value ** (1 - k))


def pk_series_b_closed(k: int, ncols_cap: int, marking: Marking | None = None) -> TruncatedSeries:
    marking = marking or Marking.all()
    _check(k, marking)
    product = TruncatedSeries.one(0, ncols_cap)
    for N in range(1, k + 1):
        factor = closed_form_first_height_b(N, N * ncols_cap, ncols_cap, marking, hmax=N)
        product = product.mul(factor.at_x_one())
    return product.scale(marking.mark_value ** (1 - k))


def pk_series_b_bivariate(k: int, xcap: int, ycap: int, marking: Marking | None = None) -> TruncatedSeries:
    marking = marking or Marking.all()
    _check(k, marking)
    r = SeriesRing(xcap, ycap)
    product = r.product(solve_system_b(xcap, ycap, marking, hmax=N).J_a[N] for N in range(1, k + 1))
    return product.scale(marking.mark_value ** (1 - k))


# ─────────────────────────────────────────────────────────────────────────────
# Displayed forms of Q_k = dP_k/dp at p = 1
# ─────────────────────────────────────────────────────────────────────────────

def qk_product_display_b(k: int, xcap: int, ycap: int) -> TruncatedSeries:
    """Π_N x^N y/(1-yS_N) · (Σ_N dJ_N/(x^N y/(1-yS_N)) - k + 1)."""
    if k < 1:
        raise UsageError(f"block count must be positive, got {k}")
    r = SeriesRing(xcap, ycap)
    y = r.y
    prefix = r.one()
    ratio_sum = r.zero()
    for N in range(1, k + 1):
        base = 1 - y * r.sum(r.mono(j, 0) for j in range(1, N + 1))
        lead = r.mono(N, 1) / base
        prefix = prefix * lead
        # dJ_N is x^N y times a series, so the quotient by the leading factor is taken
        # on the cofactor
        derivative = first_height_derivative_display_b(N, xcap + N, ycap + 1)
        cofactor = TruncatedSeries(
            xcap, ycap, {(i - N, j - 1): c for (i, j), c in derivative.coeffs.items() if i >= N and j >= 1}
        )
        ratio_sum = ratio_sum + cofactor * base
    return prefix * (ratio_sum - k + 1)


def qk_sum_form_b(k: int, tcap: int) -> TruncatedSeries:
    """φ(t) (1 - k + Σ_N (1 + (N-1) t + t^2 N(N-1) / (2(1-Nt))))."""
    if k < 1:
        raise UsageError(f"block count must be positive, got {k}")
    r = SeriesRing(0, tcap)
    t = r.y
    inner = r.sum(
        1 + (N - 1) * t + r.mono(0, 2) * Fraction(N * (N - 1), 2) / (1 - N * t) for N in range(1, k + 1)
    )
    return stirling_ogf(k, tcap) * (inner + 1 - k)


def qk_closed_b(k: int, ncols_cap: int) -> TruncatedSeries:
    """φ(t) (1 + (t/2) C(k,2) + (t/2) Σ_N (N-1)/(1-Nt))."""
    if k < 1:
        raise UsageError(f"block count must be positive, got {k}")
    r = SeriesRing(0, ncols_cap)
    t = r.y
    half_t = Fraction(1, 2) * t
    tail = r.sum(r.const(N - 1) / (1 - N * t) for N in range(1, k + 1))
    return stirling_ogf(k, ncols_cap) * (1 + half_t * comb(k, 2) + half_t * tail)


# ─────────────────────────────────────────────────────────────────────────────
# Exponential forms and totals
# ─────────────────────────────────────────────────────────────────────────────

def egf_block_total_b(n: int, k: int) -> Fraction:
    """n!·[t^n] of the exponential form of Q_k for type B."""
    return stirling(n, k) + egf_block_total_a(n, k)


def egf_time_derivative_b(n: int, k: int) -> Fraction:
    """n!·[t^n y^k] of (y/4)(y(2t-1) e^(2t+y(e^t-1)) + y e^(y(e^t-1)) + 4 e^(t+y(e^t-1)))."""
    shifted = sum(comb(n, m) * stirling(m, k - 1) for m in range(n + 1))
    return egf_time_derivative_a(n, k) + shifted


def setpart_total_b(n: int, k: int) -> PrintedDerived:
    """Total type B corners over partitions of [n+1] with k blocks."""
    a = setpart_total_a(n, k)
    extra = stirling(n + 1, k)
    return PrintedDerived(printed=a.printed + extra, derived=a.derived + extra)


def setpart_bell_b(n: int) -> PrintedDerived:
    common = Fraction(2 * n + 5, 4) * bell(n + 1) - Fraction(1, 4) * bell(n + 2)
    return PrintedDerived(
        printed=common - Fraction(n - 2, 2) * bell(n),
        derived=common - Fraction(2 * n - 1, 4) * bell(n),
    )
