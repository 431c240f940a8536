"""
Published type A closed forms, evaluated verbatim.

These are verification targets: each function expands the displayed
expression exactly as written, including any typographical slip, and the
verifier decides whether it agrees with the enumerated counts.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb

from algebra.jet import Coefficient
from algebra.series import SeriesRing, TruncatedSeries, bounded_sum
from genfuncs.marking import Marking


def _geometric_x(r: SeriesRing) -> TruncatedSeries:
    """xy / (1 - x)."""
    return r.mono(1, 1).mul((1 - r.x).inverse())


def _distinct_parts(r: SeriesRing, length: int) -> TruncatedSeries:
    """1 / ((1-x)(1-x^2)...(1-x^length))."""
    return r.product(1 - r.mono(i, 0) for i in range(1, length + 1)).inverse()


# ─────────────────────────────────────────────────────────────────────────────
# All corners
# ─────────────────────────────────────────────────────────────────────────────

def all_marks_display_a(xcap: int, ycap: int, marking: Marking | None = None) -> TruncatedSeries:
    """F = 1 / (1 - xy/(1-x) - Σ_{s>=1} (q-1)^s y^(s+1) x^C(s+2,2) / ((1-x)...(1-x^(s+1))))."""
    q: Coefficient = (marking or Marking.all()).mark_value
    r = SeriesRing(xcap, ycap)
    tail = bounded_sum(
        lambda s: (q - 1) ** s * r.mono(comb(s + 2, 2), s + 1).mul(_distinct_parts(r, s + 1)),
        lambda s: comb(s + 2, 2),
        xcap=xcap,
        ycap=ycap,
        start=1,
    )
    return (1 - _geometric_x(r) - tail).inverse()


def gf_total_a(xcap: int, ycap: int) -> TruncatedSeries:
    """G(x, y) = y^2 x^3 / ((1 - x - xy)^2 (1 + x))."""
    r = SeriesRing(xcap, ycap)
    x, y = r.x, r.y
    return r.mono(3, 2) / ((1 - x - x * y) ** 2 * (1 + x))


def gf_total_a_x1(xcap: int) -> TruncatedSeries:
    """G(x, 1) = x^3 / ((1 - 2x)(1 + x))."""
    r = SeriesRing(xcap, 0)
    x = r.x
    return r.mono(3, 0) / ((1 - 2 * x) * (1 + x))


def closed_g_n(n: int) -> Fraction:
    """g_n = ((n+1)/12 - 2/9) 2^n - (1/9)(-1)^n."""
    return (Fraction(n + 1, 12) - Fraction(2, 9)) * 2**n - Fraction(1, 9) * (-1) ** n


# ─────────────────────────────────────────────────────────────────────────────
# (v, w)-corners
# ─────────────────────────────────────────────────────────────────────────────

def vw_display_a(v: int, w: int, xcap: int, ycap: int, marking: Marking | None = None) -> TruncatedSeries:
    """F with the single-mark chain sums written as one monomial times Π (1 - x^(j+lv) y)."""
    q: Coefficient = (marking or Marking.single(v, w)).mark_value
    r = SeriesRing(xcap, ycap)

    def exponent(j: int, s: int) -> int:
        return w * j * (s + 1) + v * comb(s + 2, 2) + (w - 1) * v * comb(s + 1, 2)

    def chain_term(j: int, s: int) -> TruncatedSeries:
        closing = r.product(1 - r.mono(j + ell * v, 1) for ell in range(s + 1))
        return (q - 1) ** (s + 1) * r.mono(j + exponent(j, s), 1 + w * (s + 1)).mul(closing)

    chains = r.zero()
    for j in range(1, xcap + 1):
        chains = chains + bounded_sum(
            lambda s, j=j: chain_term(j, s),
            lambda s, j=j: j + exponent(j, s),
            xcap=xcap,
            ycap=ycap,
        )
    return (1 - _geometric_x(r) - chains).inverse()


def gf_vw_a(v: int, w: int, xcap: int, ycap: int) -> TruncatedSeries:
    """T(x, y) = x^(v+w+1) y^(w+1) (1 - xy - x^(w+2)(1-y)) / ((1 - xy/(1-x))^2 (1-x^(w+1))(1-x^(w+2)))."""
    r = SeriesRing(xcap, ycap)
    x, y = r.x, r.y
    numerator = r.mono(v + w + 1, w + 1) * (1 - x * y - r.mono(w + 2, 0) * (1 - y))
    denominator = (1 - _geometric_x(r)) ** 2 * (1 - r.mono(w + 1, 0)) * (1 - r.mono(w + 2, 0))
    return numerator / denominator


def gf_vw_a_x1(v: int, w: int, xcap: int) -> TruncatedSeries:
    """T(x, 1) = x^(v+w+1) (1-x)^3 / ((1-2x)^2 (1-x^(w+1))(1-x^(w+2)))."""
    r = SeriesRing(xcap, 0)
    x = r.x
    numerator = r.mono(v + w + 1, 0) * (1 - x) ** 3
    denominator = (1 - 2 * x) ** 2 * (1 - r.mono(w + 1, 0)) * (1 - r.mono(w + 2, 0))
    return numerator / denominator


def corollary_t_n(v: int, w: int, n: int) -> Fraction:
    """t_n = n 2^(w-v+n-1) / ((2^(w+1) - 1)(2^(w+2) - 1)); kept rational."""
    return Fraction(n) * Fraction(2) ** (w - v + n - 1) / ((2 ** (w + 1) - 1) * (2 ** (w + 2) - 1))


# ─────────────────────────────────────────────────────────────────────────────
# Height-restricted
# ─────────────────────────────────────────────────────────────────────────────

def restricted_h1_a(xcap: int, ycap: int) -> TruncatedSeries:
    """xy / (1 - xy); the display leaves out the empty bargraph."""
    r = SeriesRing(xcap, ycap)
    xy = r.mono(1, 1)
    return xy / (1 - xy)


def restricted_h2_a(xcap: int, ycap: int, marking: Marking | None = None) -> TruncatedSeries:
    """1 / (1 - (x+x^2) y - x^2 (1-xy) Σ_m x^m y^m q(1,m) + x^3 y^2)."""
    marking = marking or Marking.unmarked()
    r = SeriesRing(xcap, ycap)
    x, y = r.x, r.y
    plateaus = TruncatedSeries(
        xcap, ycap, {(m, m): marking.factor(1, m) for m in range(1, min(xcap, ycap) + 1)}
    )
    denominator = 1 - (x + r.mono(2, 0)) * y - r.mono(2, 0) * (1 - x * y) * plateaus + r.mono(3, 2)
    return denominator.inverse()
