"""
Type A corners over set partitions.

A partition with k blocks reads ``1 π(1) 2 π(2) ... k π(k)`` with π(N) a word
over [N], so its series is the product of the height-restricted first-height
series ``H_N`` (height bound N) for N = 1..k.  Each factor is solved with an
x-cap of ``N·ncols`` so that setting x = 1 is exact; the product is then a
series in t (stored as the y-variable with x-cap 0).
"""
from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import NamedTuple

from algebra.series import SeriesRing, TruncatedSeries
from combinatorics.stirling import bell, stirling
from genfuncs.marking import Marking
from genfuncs.type_a.closed_form import closed_form_first_height_a
from genfuncs.type_a.solver import solve_system_a
from utils.errors import UsageError
from utils.logging import get_logger

logger = get_logger(__name__)


class PrintedDerived(NamedTuple):
    printed: Fraction
    derived: Fraction


def _check_blocks(k: int) -> None:
    if k < 1:
        raise UsageError(f"block count must be positive, got {k}")


def stirling_ogf(k: int, tcap: int) -> TruncatedSeries:
    """φ(t) = t^k / ((1-t)(1-2t)...(1-kt))."""
    r = SeriesRing(0, tcap)
    t = r.y
    return r.mono(0, k) / r.product(1 - j * t for j in range(1, k + 1))


# ─────────────────────────────────────────────────────────────────────────────
# Product route
# ─────────────────────────────────────────────────────────────────────────────

def pk_series_a(k: int, ncols_cap: int, marking: Marking | None = None) -> TruncatedSeries:
    """P_k(1, t): value coefficient of t^n is S(n, k), derivative part counts corners."""
    _check_blocks(k)
    marking = marking or Marking.all()
    product = TruncatedSeries.one(0, ncols_cap)
    for N in range(1, k + 1):
        factor = solve_system_a(N * ncols_cap, ncols_cap, marking, hmax=N).H_a[N]
        product = product.mul(factor.at_x_one())
    logger.debug("setpartition_product", kind="A", k=k, ncols_cap=ncols_cap)
    return product


def pk_series_a_closed(k: int, ncols_cap: int, marking: Marking | None = None) -> TruncatedSeries:
    """P_k(1, t) with every factor taken from the chain-sum closed form."""
    _check_blocks(k)
    marking = marking or Marking.all()
    product = TruncatedSeries.one(0, ncols_cap)
    for N in range(1, k + 1):
        factor = closed_form_first_height_a(N, N * ncols_cap, ncols_cap, marking, hmax=N)
        product = product.mul(factor.at_x_one())
    return product


def pk_series_a_bivariate(k: int, xcap: int, ycap: int, marking: Marking | None = None) -> TruncatedSeries:
    """P_k(x, y) before setting x = 1."""
    _check_blocks(k)
    marking = marking or Marking.all()
    r = SeriesRing(xcap, ycap)
    return r.product(solve_system_a(xcap, ycap, marking, hmax=N).H_a[N] for N in range(1, k + 1))


# ─────────────────────────────────────────────────────────────────────────────
# Displayed forms of Q_k = dP_k/dq at q = 1
# ─────────────────────────────────────────────────────────────────────────────

def qk_product_display_a(k: int, xcap: int, ycap: int) -> TruncatedSeries:
    """Π_N x^N y/(1-yS_N) · Σ_N Σ_{j<N} (x^j y (1-yS_N) + x^j y^2 (x^(j+1)+...+x^N)) / (1-yS_N)."""
    _check_blocks(k)
    r = SeriesRing(xcap, ycap)
    y = r.y

    def heights(lo: int, hi: int) -> TruncatedSeries:
        return r.sum(r.mono(i, 0) for i in range(lo, hi + 1))

    prefix = r.product(r.mono(N, 1) / (1 - y * heights(1, N)) for N in range(1, k + 1))
    total = r.zero()
    for N in range(1, k + 1):
        base = 1 - y * heights(1, N)
        inner = r.sum(
            r.mono(j, 1) * base + r.mono(j, 2) * heights(j + 1, N) for j in range(1, N)
        )
        total = total + inner / base
    return prefix * total


def qk_sum_form_a(k: int, tcap: int) -> TruncatedSeries:
    """φ(t) Σ_{N=2..k} ((N-1) t + t^2 Σ_{j<N} (N-j) / (1 - Nt))."""
    _check_blocks(k)
    r = SeriesRing(0, tcap)
    t = r.y
    inner = r.sum(
        (N - 1) * t + r.mono(0, 2) * sum(N - j for j in range(1, N)) / (1 - N * t)
        for N in range(2, k + 1)
    )
    return stirling_ogf(k, tcap) * inner


def qk_closed_a(k: int, ncols_cap: int) -> TruncatedSeries:
    """½C(k,2) t φ - ½ k φ + ½ t φ' - ½ t^2 φ'."""
    _check_blocks(k)
    r = SeriesRing(0, ncols_cap + 1)
    t = r.y
    phi = stirling_ogf(k, ncols_cap + 1)
    dphi = phi.derivative_y()
    half = Fraction(1, 2)
    q = half * comb(k, 2) * t * phi - half * k * phi + half * t * dphi - half * t * t * dphi
    return q.truncate(0, ncols_cap)


# ─────────────────────────────────────────────────────────────────────────────
# Exponential forms and totals
# ─────────────────────────────────────────────────────────────────────────────

def egf_block_total_a(n: int, k: int) -> Fraction:
    """n!·[t^n] of the exponential form of Q_k: total over partitions of [n] with k blocks."""
    half = Fraction(1, 2)
    return (
        half * comb(k, 2) * stirling(n - 1, k)
        - half * k * stirling(n, k)
        + half * n * stirling(n, k)
        - half * (n - 1) * stirling(n - 1, k)
    )


def _shifted_exp_sum(n: int, k: int, base: int) -> int:
    """n!·[t^n y^k] of e^(base·t) e^(y(e^t - 1))."""
    return sum(comb(n, m) * base ** (n - m) * stirling(m, k) for m in range(n + 1))


def egf_time_derivative_a(n: int, k: int) -> Fraction:
    """n!·[t^n y^k] of (y^2/4)(2t e^(2t) - e^(2t) + 1) e^(y(e^t-1)): total over [n+1]."""
    lead = 2 * n * _shifted_exp_sum(n - 1, k - 2, 2) if n > 0 else 0
    return Fraction(lead - _shifted_exp_sum(n, k - 2, 2) + stirling(n, k - 2), 4)


def setpart_total_a(n: int, k: int) -> PrintedDerived:
    """Total type A corners over partitions of [n+1] with k blocks."""
    common = (
        Fraction(n, 2) * stirling(n + 1, k)
        - Fraction(1, 4) * stirling(n + 2, k)
        - Fraction(n, 2) * stirling(n, k)
        + Fraction(1, 4) * stirling(n + 1, k)
    )
    return PrintedDerived(
        printed=common + stirling(n, k - 2),
        derived=common + Fraction(1, 4) * stirling(n, k - 2),
    )


def setpart_bell_a(n: int) -> PrintedDerived:
    """Total type A corners over all partitions of [n+1]."""
    common = Fraction(2 * n + 1, 4) * bell(n + 1) - Fraction(1, 4) * bell(n + 2)
    return PrintedDerived(
        printed=common - Fraction(n - 2, 2) * bell(n),
        derived=common - Fraction(2 * n - 1, 4) * bell(n),
    )
