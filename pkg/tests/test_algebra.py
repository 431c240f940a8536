from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from algebra.jet import EPSILON_MARK, Jet, deriv_of, value_of
from algebra.series import SeriesRing, TruncatedSeries, bounded_sum, series_inverse
from utils.errors import AlgebraDomainError, UsageError

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
nonzero = fractions.filter(lambda f: f != 0)
jets = st.builds(Jet, fractions, fractions)


@pytest.fixture
def ring() -> SeriesRing:
    return SeriesRing(6, 6)


def series_from(coeffs: dict, xcap: int = 4, ycap: int = 3) -> TruncatedSeries:
    return TruncatedSeries(xcap, ycap, coeffs)


coefficient_maps = st.dictionaries(
    st.tuples(st.integers(0, 4), st.integers(0, 3)), fractions, max_size=8
)


# ─────────────────────────────────────────────────────────────────────────────
# Jets
# ─────────────────────────────────────────────────────────────────────────────

def test_jet_arithmetic():
    """Test 1: Jets follow the product and quotient rules."""
    p = Jet(2, 3)
    q = Jet(5, -1)
    assert p + q == Jet(7, 2)
    assert p * q == Jet(10, 13), "product rule"
    assert (p / q) * q == p
    assert 3 - p == Jet(1, -3)
    assert EPSILON_MARK**4 == Jet(1, 4)
    assert Jet(2, 1) ** -1 == Jet(Fraction(1, 2), Fraction(-1, 4))


def test_jet_compares_with_rationals():
    """Test 2: A jet with zero derivative equals its value and hashes like it."""
    assert Jet(3, 0) == 3
    assert hash(Jet(Fraction(1, 2), 0)) == hash(Fraction(1, 2))
    assert Jet(3, 1) != 3
    assert not Jet(0, 0)
    assert value_of(Jet(4, 7)) == 4 and deriv_of(Jet(4, 7)) == 7
    assert deriv_of(5) == 0


def test_jet_inverse_of_pure_derivative_fails():
    """Test 3: ε alone has no inverse."""
    with pytest.raises(AlgebraDomainError):
        Jet(0, 1).inverse()


@given(jets, jets, jets)
def test_jet_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@given(jets.filter(lambda j: j.value != 0))
def test_jet_inverse_property(a):
    assert a * a.inverse() == 1


@given(fractions, fractions, st.integers(0, 6))
def test_jet_power_matches_derivative(a, b, n):
    """(a + bε)^n carries n a^(n-1) b."""
    power = Jet(a, b) ** n
    assert power.value == a**n
    assert power.deriv == (n * a ** (n - 1) * b if n else 0)


# ─────────────────────────────────────────────────────────────────────────────
# Truncated series
# ─────────────────────────────────────────────────────────────────────────────

def test_series_drops_terms_beyond_caps():
    """Test 4: Construction keeps only monomials within caps and drops zeros."""
    s = TruncatedSeries(2, 2, {(1, 1): 3, (3, 0): 5, (0, 3): 1, (2, 2): 0})
    assert dict(s.coeffs) == {(1, 1): 3}


def test_series_rejects_bad_caps_and_exponents():
    """Test 5: Negative caps or exponents are usage errors."""
    with pytest.raises(UsageError):
        TruncatedSeries(-1, 0)
    with pytest.raises(UsageError):
        TruncatedSeries(2, 2, {(-1, 0): 1})


def test_series_cap_mismatch(ring):
    """Test 6: Series with different caps do not mix."""
    with pytest.raises(UsageError):
        ring.x + SeriesRing(5, 6).x


def test_compositions_from_inverse(ring):
    """Test 7: (1-x)/(1-x-xy) counts compositions: [x^n y^k] = C(n-1, k-1)."""
    h = (1 - ring.x) / (1 - ring.x - ring.x * ring.y)
    for n in range(1, 7):
        for k in range(1, 7):
            assert h.coefficient(n, k) == comb(n - 1, k - 1), f"mismatch at x^{n} y^{k}"
    assert h.coefficient(0, 0) == 1


def test_inverse_requires_constant_term(ring):
    """Test 8: Inverting a series with zero constant term fails."""
    with pytest.raises(AlgebraDomainError):
        series_inverse(ring.x + ring.y)
    with pytest.raises(AlgebraDomainError):
        (ring.x + Jet(0, 1)).inverse()


def test_power_and_negative_power(ring):
    """Test 9: (1-x)^-2 has coefficients n+1."""
    s = (1 - ring.x) ** -2
    assert [s.coefficient(n, 0) for n in range(7)] == [1, 2, 3, 4, 5, 6, 7]
    assert (1 + ring.y) ** 3 == 1 + 3 * ring.y + 3 * ring.y * ring.y + ring.mono(0, 3)


def test_projections(ring):
    """Test 10: x := 1, y := 1 and the derivative in y."""
    s = ring.mono(2, 1, 3) + ring.mono(1, 1, 2) + ring.mono(3, 2)
    assert dict(s.at_x_one().coeffs) == {(0, 1): 5, (0, 2): 1}
    assert dict(s.at_y_one().coeffs) == {(1, 0): 2, (2, 0): 3, (3, 0): 1}
    assert dict(s.derivative_y().coeffs) == {(2, 0): 3, (1, 0): 2, (3, 1): 2}
    with pytest.raises(UsageError):
        s.truncate(7, 6)


def test_jet_coefficients_split(ring):
    """Test 11: Value and derivative parts of a jet-valued series."""
    s = ring.mono(1, 1, EPSILON_MARK) * ring.mono(1, 0, Jet(2, 3))
    assert s.coefficient(2, 1) == Jet(2, 5)
    assert s.value_part().coefficient(2, 1) == 2
    assert s.deriv_part().coefficient(2, 1) == 5
    assert s.has_jets()


def test_bounded_sum_geometric(ring):
    """Test 12: Σ_s x^s stops at the cap and equals 1/(1-x)."""
    total = bounded_sum(lambda s: ring.mono(s, 0), lambda s: s, xcap=6, ycap=6)
    assert total == (1 - ring.x).inverse()


def test_bounded_sum_rejects_bad_bounds(ring):
    """Test 13: Bounds must increase and must bound the terms."""
    with pytest.raises(UsageError):
        bounded_sum(lambda s: ring.mono(1, 0), lambda s: 1, xcap=6, ycap=6)
    with pytest.raises(UsageError):
        bounded_sum(lambda s: ring.mono(s, 0), lambda s: s + 1, xcap=6, ycap=6)
    with pytest.raises(UsageError):
        bounded_sum(lambda s: ring.mono(s, 0), lambda s: s, xcap=6, ycap=6, start=2, strict_from=1)


def test_bounded_sum_settles_after_a_prefix(ring):
    """Test 14: Bounds may plateau or drop before strict_from and only increase after it."""
    plateau = bounded_sum(
        lambda s: ring.mono(2, 0) if s < 3 else ring.mono(s, 0),
        lambda s: 2 if s < 3 else s,
        xcap=6,
        ycap=6,
        strict_from=3,
    )
    assert plateau == 3 * ring.mono(2, 0) + ring.sum(ring.mono(s, 0) for s in range(3, 7))

    calls = []

    def family(s):
        calls.append(s)
        return ring.mono(s, 0)

    dropping = bounded_sum(family, lambda s: 9 if s == 0 else s, xcap=6, ycap=6, strict_from=1)
    assert dropping == ring.sum(ring.mono(s, 0) for s in range(1, 7))
    assert calls == [1, 2, 3, 4, 5, 6]


@given(coefficient_maps, coefficient_maps, coefficient_maps)
def test_series_ring_axioms(a, b, c):
    f, g, h = series_from(a), series_from(b), series_from(c)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f * g == g * f
    assert f - f == TruncatedSeries.zero(4, 3)


@given(coefficient_maps, nonzero)
def test_series_inverse_property(a, head):
    f = series_from({**a, (0, 0): head})
    assert f * f.inverse() == TruncatedSeries.one(4, 3)


@given(coefficient_maps, coefficient_maps)
def test_jet_lift_is_derivative(a, b):
    """f + εg evaluated through jets: the value part multiplies like f, the derivative obeys the product rule."""
    f, g = series_from(a), series_from(b)
    lifted = TruncatedSeries(4, 3, {k: Jet(f.coefficient(*k), g.coefficient(*k)) for k in set(a) | set(b)})
    square = lifted * lifted
    assert square.value_part() == f * f
    assert square.deriv_part() == 2 * f * g
