"""
Published type B closed forms, evaluated verbatim.

As for type A these are targets, not trusted results.  For type B the pair
``(v, w)`` means v horizontal steps followed by w down steps.
"""
from __future__ import annotations

from math import comb

from algebra.jet import Coefficient
from algebra.series import SeriesRing, TruncatedSeries, bounded_sum
from genfuncs.marking import Marking


def _geometric_x(r: SeriesRing) -> TruncatedSeries:
    """xy / (1 - x)."""
    return r.mono(1, 1).mul((1 - r.x).inverse())


def _distinct_parts(r: SeriesRing, length: int) -> TruncatedSeries:
    return r.product(1 - r.mono(i, 0) for i in range(1, length + 1)).inverse()


# ─────────────────────────────────────────────────────────────────────────────
# All corners
# ─────────────────────────────────────────────────────────────────────────────

def all_marks_chain_display_b(j: int, xcap: int, ycap: int, marking: Marking | None = None) -> TruncatedSeries:
    """Γ_j = Σ_s (p-1)^(s+1) y^(s+1) x^((s+1)j + C(s+2,2)) / ((1-x)...(1-x^(s+1)))."""
    p: Coefficient = (marking or Marking.all()).mark_value
    r = SeriesRing(xcap, ycap)
    return bounded_sum(
        lambda s: (p - 1) ** (s + 1)
        * r.mono((s + 1) * j + comb(s + 2, 2), s + 1).mul(_distinct_parts(r, s + 1)),
        lambda s: (s + 1) * j + comb(s + 2, 2),
        xcap=xcap,
        ycap=ycap,
    )


def all_marks_display_b(xcap: int, ycap: int, marking: Marking | None = None) -> TruncatedSeries:
    """F = 1 + (p xy/(1-x) + p Σ) / (1 - xy/(1-x) - Σ), Σ = Σ_s (p-1)^(s+1) y^(s+2) x^C(s+3,2) / ((1-x)...(1-x^(s+2)))."""
    p: Coefficient = (marking or Marking.all()).mark_value
    r = SeriesRing(xcap, ycap)
    chains = bounded_sum(
        lambda s: (p - 1) ** (s + 1) * r.mono(comb(s + 3, 2), s + 2).mul(_distinct_parts(r, s + 2)),
        lambda s: comb(s + 3, 2),
        xcap=xcap,
        ycap=ycap,
    )
    geometric = _geometric_x(r)
    return 1 + (p * geometric + p * chains) / (1 - geometric - chains)


def gf_total_b_printed(xcap: int, ycap: int) -> TruncatedSeries:
    """H(x, y) = xy (1 - x - xy + x^2 y^2) / (1 - x - xy)^2."""
    r = SeriesRing(xcap, ycap)
    x, y = r.x, r.y
    return r.mono(1, 1) * (1 - x - x * y + r.mono(2, 2)) / (1 - x - x * y) ** 2


def gf_total_b_x1_printed(xcap: int) -> TruncatedSeries:
    """H(x, 1) = x (x - 1)^2 / (1 - 2x)^2."""
    r = SeriesRing(xcap, 0)
    x = r.x
    return x * (x - 1) ** 2 / (1 - 2 * x) ** 2


# ─────────────────────────────────────────────────────────────────────────────
# (v, w)-corners
# ─────────────────────────────────────────────────────────────────────────────

def vw_chain_display_b(v: int, w: int, j: int, xcap: int, ycap: int, marking: Marking | None = None) -> TruncatedSeries:
    """Γ_j = Σ_s (p-1)^(s+1) y^(v(s+1)) x^(vj(s+1) + vw C(s+1,2)) Π_{l=0..s} (1 - x^(j+(l+1)w) y)."""
    p: Coefficient = (marking or Marking.single(v, w)).mark_value
    r = SeriesRing(xcap, ycap)

    def exponent(s: int) -> int:
        return v * j * (s + 1) + v * w * comb(s + 1, 2)

    def term(s: int) -> TruncatedSeries:
        closing = r.product(1 - r.mono(j + (ell + 1) * w, 1) for ell in range(s + 1))
        return (p - 1) ** (s + 1) * r.mono(exponent(s), v * (s + 1)).mul(closing)

    return bounded_sum(term, exponent, xcap=xcap, ycap=ycap)


def vw_display_b(v: int, w: int, xcap: int, ycap: int, marking: Marking | None = None) -> TruncatedSeries:
    """F = 1 + (xy/(1-x) + (1+Γ_w)(1-x^w y) x^(wv) y^v (p-1) + y Σ_j x^j Γ_j) / (1 - xy/(1-x) - y Σ_j x^j Γ_j)."""
    marking = marking or Marking.single(v, w)
    p: Coefficient = marking.mark_value
    r = SeriesRing(xcap, ycap)
    gammas = {j: vw_chain_display_b(v, w, j, xcap, ycap, marking) for j in range(1, xcap + 1)}
    chains = r.sum(r.mono(j, 1).mul(gamma) for j, gamma in gammas.items())
    own = (1 + gammas.get(w, r.zero())) * (1 - r.mono(w, 1)) * r.mono(w * v, v) * (p - 1)
    geometric = _geometric_x(r)
    return 1 + (geometric + own + chains) / (1 - geometric - chains)


def gf_vw_b_printed(v: int, w: int, xcap: int, ycap: int) -> TruncatedSeries:
    """T(x, y) = (1-x^w y) x^(vw) y^w / D^2 + (y^(v+1) x^(2v+3) (1-x^w y) + (yx)^(v+1) (1-x^(w+1) y)) / ((1-x^(v+1))(1-x^(v+2)) D^2), D = 1 - xy/(1-x)."""
    r = SeriesRing(xcap, ycap)
    squared = (1 - _geometric_x(r)) ** 2
    first = (1 - r.mono(w, 1)) * r.mono(v * w, w) / squared
    numerator = r.mono(2 * v + 3, v + 1) * (1 - r.mono(w, 1)) + r.mono(v + 1, v + 1) * (1 - r.mono(w + 1, 1))
    second = numerator / ((1 - r.mono(v + 1, 0)) * (1 - r.mono(v + 2, 0)) * squared)
    return first + second


def gf_vw_b_x1_printed(v: int, w: int, xcap: int) -> TruncatedSeries:
    """T(x, 1) = (1-x^w) x^(vw) / D^2 + (x^(2v+3)(1-x^w) + x^(v+1)(1-x^(w+1))) / ((1-x^(v+1))(1-x^(v+2)) D^2), D = 1 - x/(1-x)."""
    r = SeriesRing(xcap, 0)
    x = r.x
    squared = (1 - x / (1 - x)) ** 2
    first = (1 - r.mono(w, 0)) * r.mono(v * w, 0) / squared
    numerator = r.mono(2 * v + 3, 0) * (1 - r.mono(w, 0)) + r.mono(v + 1, 0) * (1 - r.mono(w + 1, 0))
    second = numerator / ((1 - r.mono(v + 1, 0)) * (1 - r.mono(v + 2, 0)) * squared)
    return first + second


# ─────────────────────────────────────────────────────────────────────────────
# Height-restricted
# ─────────────────────────────────────────────────────────────────────────────

def restricted_j1_b(xcap: int, ycap: int, marking: Marking | None = None) -> TruncatedSeries:
    """J^(1) = 1 + Σ_m x^m y^m p(m, 1)."""
    marking = marking or Marking.all()
    coeffs = {(0, 0): 1}
    for m in range(1, min(xcap, ycap) + 1):
        coeffs[(m, m)] = marking.factor(m, 1)
    return TruncatedSeries(xcap, ycap, coeffs)


def _column_sum(r: SeriesRing, N: int) -> TruncatedSeries:
    """y Σ_{j<=N} x^j."""
    return r.sum(r.mono(j, 1) for j in range(1, N + 1))


def restricted_derivative_display_b(N: int, xcap: int, ycap: int) -> TruncatedSeries:
    """dJ^(N)/dp at p=1 = (yS - (yS)^2 + y^2 Σ_j x^j (x^(j+1) - x^(N+1))/(1-x)) / (1 - yS)^2."""
    r = SeriesRing(xcap, ycap)
    ys = _column_sum(r, N)
    inner = r.sum(
        r.mono(j, 2) * (r.mono(j + 1, 0) - r.mono(N + 1, 0)) / (1 - r.x) for j in range(1, N + 1)
    )
    return (ys - ys * ys + inner) / (1 - ys) ** 2


def first_height_derivative_display_b(N: int, xcap: int, ycap: int) -> TruncatedSeries:
    """dJ_N^(N)/dp at p=1 = x^N y (dJ^(N)/dp + (1 - x^N y)/(1 - Σ_j x^j y))."""
    r = SeriesRing(xcap, ycap)
    lead = r.mono(N, 1)
    return lead * (restricted_derivative_display_b(N, xcap, ycap) + (1 - lead) / (1 - _column_sum(r, N)))


def first_height_derivative_x1_display_b(N: int, tcap: int) -> TruncatedSeries:
    """dJ_N^(N)/dp at p=1, x=1: t (Nt/(1-Nt) + t^2 N(N-1)/(2(1-Nt)^2) + (1-t)/(1-Nt))."""
    r = SeriesRing(0, tcap)
    t = r.y
    base = 1 - N * t
    return t * (N * t / base + r.mono(0, 2) * (N * (N - 1)) / (2 * base**2) + (1 - t) / base)
