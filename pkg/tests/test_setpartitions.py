from fractions import Fraction

import pytest

from algebra.jet import Jet
from combinatorics.census import CensusTable, census_setpartitions
from combinatorics.stirling import stirling
from genfuncs.marking import Marking
from genfuncs.type_a.setpartitions import (
    egf_block_total_a,
    pk_series_a,
    qk_closed_a,
    setpart_bell_a,
    setpart_total_a,
    stirling_ogf,
)
from genfuncs.type_b.setpartitions import egf_block_total_b, pk_series_b, setpart_total_b
from utils.errors import UsageError
from utils.models import CornerKind

N_MAX = 6


@pytest.fixture(scope="module")
def census() -> CensusTable:
    return census_setpartitions(N_MAX)


def test_stirling_ogf():
    """Test 1: φ(t) for k = 2 has coefficients S(n, 2)."""
    phi = stirling_ogf(2, 8)
    assert [phi.coefficient(0, n) for n in range(9)] == [stirling(n, 2) for n in range(9)]


@pytest.mark.parametrize("k", [1, 2, 3])
def test_product_counts_partitions_and_type_a_corners(census, k):
    """Test 2: Value parts are S(n, k), derivative parts the census totals."""
    series = pk_series_a(k, N_MAX)
    totals = census.totals(CornerKind.A)
    for n in range(N_MAX + 1):
        assert series.coefficient(0, n) == Jet(stirling(n, k), totals.get((n, k), 0)), f"n={n}"


@pytest.mark.parametrize("k", [1, 2, 3])
def test_product_counts_partitions_and_type_b_corners(census, k):
    """Test 3: The p^(1-k) correction leaves exactly the type B totals."""
    series = pk_series_b(k, N_MAX)
    totals = census.totals(CornerKind.B)
    for n in range(1, N_MAX + 1):
        assert series.coefficient(0, n) == Jet(stirling(n, k), totals.get((n, k), 0)), f"n={n}"


def test_type_b_product_needs_equal_marks():
    """Test 4: A single (v,w) mark cannot be pushed through the product."""
    with pytest.raises(UsageError):
        pk_series_b(2, 4, Marking.single(1, 1))
    with pytest.raises(UsageError):
        pk_series_a(0, 4)


def test_closed_q2():
    """Test 5: Three elements in two blocks carry one type A corner (121)."""
    assert qk_closed_a(2, 6).coefficient(0, 3) == 1
    assert pk_series_b(2, 5).coefficient(0, 3) == Jet(3, 4)


def test_exponential_forms_match_census(census):
    """Test 6: Block-count totals from the exponential forms, ground sets of size one and more."""
    for n in range(1, N_MAX + 1):
        for k in range(n + 1):
            assert egf_block_total_a(n, k) == census.record(n, k).total_a, f"A at ({n},{k})"
            assert egf_block_total_b(n, k) == census.record(n, k).total_b, f"B at ({n},{k})"


def test_total_over_blocks_printed_vs_derived(census):
    """Test 7: The printed last term S(n,k-2) is off by a factor of four; the derived S(n,k-2)/4 holds."""
    assert setpart_total_a(2, 3).printed == Fraction(3, 4)
    assert setpart_total_a(2, 3).derived == 0
    assert setpart_total_a(0, 2).printed == Fraction(3, 4)
    for n in range(N_MAX):
        for k in range(n + 3):
            assert setpart_total_a(n, k).derived == census.record(n + 1, k).total_a, f"A at ({n},{k})"
            assert setpart_total_b(n, k).derived == census.record(n + 1, k).total_b, f"B at ({n},{k})"


def test_bell_totals():
    """Test 8: Over all partitions of [3] only 121 has a type A corner."""
    assert setpart_bell_a(2).derived == 1
    assert setpart_bell_a(2).printed == Fraction(5, 2)
    assert setpart_bell_a(0).derived == 0
