"""Coefficient-table comparison and the asymptotic-ratio classifier."""
from __future__ import annotations

from collections.abc import Iterable, Mapping
from fractions import Fraction
from typing import Literal

from algebra.jet import Coefficient, deriv_of, value_of
from algebra.series import TruncatedSeries
from utils.models import Discrepancy

Index = tuple[int, ...]
Part = Literal["value", "deriv"]


def render(value: Coefficient) -> str:
    """Exact text: ``"4/7"``, ``"-3"``."""
    return str(Fraction(value_of(value)))


def series_table(series: TruncatedSeries, part: Part = "value") -> dict[Index, Fraction]:
    extract = value_of if part == "value" else deriv_of
    return {key: extract(c) for key, c in series.coeffs.items()}


def univariate_table(series: TruncatedSeries, part: Part = "value") -> dict[Index, Fraction]:
    """``{(n,): coeff}`` for a series in one variable (either x with y-cap 0 or t stored as y)."""
    extract = value_of if part == "value" else deriv_of
    if series.xcap == 0:
        return {(j,): extract(c) for (_, j), c in series.coeffs.items()}
    return {(i,): extract(c) for (i, _), c in series.coeffs.items()}


def restrict(table: Mapping[Index, Coefficient], bounds: Iterable[int | None]) -> dict[Index, Coefficient]:
    """Keep entries whose every index is within the matching upper bound (``None``: unbounded)."""
    limits = tuple(bounds)
    return {
        key: c
        for key, c in table.items()
        if all(limit is None or part <= limit for part, limit in zip(key, limits))
    }


def first_discrepancy(
    expected: Mapping[Index, Coefficient],
    got: Mapping[Index, Coefficient],
    *,
    part: Part | None = None,
    prefix: Index = (),
    keys: Iterable[Index] | None = None,
) -> Discrepancy | None:
    """First index, in lexicographic order, where the two tables differ (missing entries read 0)."""
    scan = sorted(set(expected) | set(got)) if keys is None else keys
    for key in scan:
        want = Fraction(value_of(expected.get(key, 0)))
        have = Fraction(value_of(got.get(key, 0)))
        if want != have:
            return Discrepancy(index=[*prefix, *key], part=part, expected=render(want), got=render(have))
    return None


def compare_series(
    expected: TruncatedSeries, got: TruncatedSeries, *, prefix: Index = ()
) -> Discrepancy | None:
    """Value and derivative parts, coefficient by coefficient; value part first at each index."""
    keys = sorted(set(expected.coeffs) | set(got.coeffs))
    for key in keys:
        for part, extract in (("value", value_of), ("deriv", deriv_of)):
            want = extract(expected.coefficient(*key))
            have = extract(got.coefficient(*key))
            if want != have:
                return Discrepancy(index=[*prefix, *key], part=part, expected=render(want), got=render(have))
    return None


def all_mismatches(
    expected: Mapping[Index, Coefficient], got: Mapping[Index, Coefficient], limit: int = 5
) -> list[Index]:
    out = []
    for key in sorted(set(expected) | set(got)):
        if Fraction(value_of(expected.get(key, 0))) != Fraction(value_of(got.get(key, 0))):
            out.append(key)
            if len(out) == limit:
                break
    return out


# ─────────────────────────────────────────────────────────────────────────────
# Asymptotic classifier
# ─────────────────────────────────────────────────────────────────────────────

RATIO_BAND = Fraction(1, 4)


def window_ratios(
    exact: Mapping[int, Fraction], formula: Mapping[int, Fraction], n_hi: int, window: int
) -> list[Fraction] | None:
    """exact/formula on ``[n_hi - window, n_hi]`` (``window + 1`` ratios); ``None`` when a value there is zero."""
    ratios = []
    for n in range(n_hi - window, n_hi + 1):
        num, den = Fraction(exact.get(n, 0)), Fraction(formula.get(n, 0))
        if num == 0 or den == 0:
            return None
        ratios.append(num / den)
    return ratios


def is_asymptotic(ratios: list[Fraction] | None) -> bool:
    """Monotone ratios, each within 25% of the last one."""
    if not ratios:
        return False
    increasing = all(a <= b for a, b in zip(ratios, ratios[1:]))
    decreasing = all(a >= b for a, b in zip(ratios, ratios[1:]))
    last = ratios[-1]
    banded = all(abs(r - last) <= RATIO_BAND * abs(last) for r in ratios)
    return (increasing or decreasing) and banded
