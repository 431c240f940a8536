from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from combinatorics.bargraph import Bargraph, Corner, corner_counts, corners, enumerate_bargraphs
from combinatorics.census import CensusTable, census_bargraphs, census_setpartitions, corner_weight_census
from combinatorics.setpartition import SetPartitionWord, as_bargraph, enumerate_setpartitions
from combinatorics.stirling import bell, stirling, stirling_row
from genfuncs.marking import Marking
from utils.errors import ConfigurationError, InvalidWordError
from utils.models import CornerKind

A, B = CornerKind.A, CornerKind.B

height_words = st.lists(st.integers(1, 6), min_size=1, max_size=10)


@pytest.fixture(scope="module")
def census_six() -> CensusTable:
    return census_bargraphs(6)


# ─────────────────────────────────────────────────────────────────────────────
# Corners
# ─────────────────────────────────────────────────────────────────────────────

def test_worked_example_corners():
    """Test 1: 244411322 has two type A and three type B corners."""
    found = corners(Bargraph.parse("244411322"))
    assert found == [
        Corner(B, 3, 3, 4),
        Corner(A, 3, 2, 5),
        Corner(B, 1, 1, 7),
        Corner(A, 1, 2, 8),
        Corner(B, 2, 2, 9),
    ]
    assert [c.label() for c in found][-1] == "B(2,2)@9"


def test_small_bargraph_corners():
    """Test 2: Corners of the bargraphs with three cells."""
    assert corners(Bargraph.parse("3")) == [Corner(B, 1, 3, 1)]
    assert corners(Bargraph.parse("21")) == [Corner(B, 1, 1, 1), Corner(A, 1, 1, 2), Corner(B, 1, 1, 2)]
    assert corners(Bargraph.parse("12")) == [Corner(B, 1, 2, 2)]
    assert corners(Bargraph.parse("111")) == [Corner(B, 3, 1, 3)]
    assert corners(Bargraph(())) == []


def test_invalid_words():
    """Test 3: Non-positive heights and non-digit words are rejected."""
    with pytest.raises(InvalidWordError):
        Bargraph((2, 0, 1))
    with pytest.raises(InvalidWordError):
        Bargraph.parse("2a1")
    with pytest.raises(InvalidWordError):
        SetPartitionWord.parse("1214")
    with pytest.raises(InvalidWordError):
        SetPartitionWord.parse("21")


def test_multi_digit_words():
    """Test 4: Heights of 10 or more render comma separated."""
    g = Bargraph.parse([10, 2])
    assert g.word() == "10,2"
    assert g.cells == 12 and g.columns == 2 and g.max_height == 10


@given(height_words)
def test_one_more_b_corner_than_a(heights):
    g = Bargraph(tuple(heights))
    count_a, count_b = corner_counts(g)
    descents = sum(1 for i in range(1, len(heights)) if heights[i - 1] > heights[i])
    assert count_a == descents
    assert count_b == count_a + 1


@given(height_words)
def test_corner_runs_fit_the_word(heights):
    """A corner's horizontal run never leaves the word and its drop matches the heights."""
    g = Bargraph(tuple(heights))
    for c in corners(g):
        assert 1 <= c.col <= g.columns
        if c.kind is A:
            assert c.col + c.b - 1 <= g.columns
            assert heights[c.col - 2] - heights[c.col - 1] == c.a
        else:
            assert c.a <= c.col
            following = heights[c.col] if c.col < g.columns else 0
            assert heights[c.col - 1] - following == c.b


# ─────────────────────────────────────────────────────────────────────────────
# Enumeration
# ─────────────────────────────────────────────────────────────────────────────

def test_enumerate_bargraphs_counts():
    """Test 5: 2^(n-1) bargraphs with n cells, filters by columns and height."""
    for n in range(1, 9):
        assert sum(1 for _ in enumerate_bargraphs(n)) == 2 ** (n - 1)
    assert [g.word() for g in enumerate_bargraphs(3)] == ["111", "12", "21", "3"]
    assert [g.word() for g in enumerate_bargraphs(3, 2)] == ["12", "21"]
    assert [g.word() for g in enumerate_bargraphs(4, hmax=2)] == ["1111", "112", "121", "211", "22"]
    assert [g.word() for g in enumerate_bargraphs(0)] == [""]


def test_enumerate_setpartitions():
    """Test 6: Restricted growth words number B_n, and S(n, k) per block count."""
    assert [w.word() for w in enumerate_setpartitions(3)] == ["111", "112", "121", "122", "123"]
    for n in range(0, 8):
        assert sum(1 for _ in enumerate_setpartitions(n)) == bell(n)
        for k in range(0, n + 1):
            assert sum(1 for _ in enumerate_setpartitions(n, k)) == stirling(n, k)
    w = SetPartitionWord.parse("12132")
    assert (w.size, w.blocks) == (5, 3)
    assert as_bargraph(w).heights == (1, 2, 1, 3, 2)


def test_stirling_and_bell():
    """Test 7: Known Stirling and Bell values, zero outside the triangle."""
    assert stirling_row(5) == [0, 1, 15, 25, 10, 1]
    assert stirling(0, 0) == 1
    assert stirling(-1, 0) == 0 and stirling(3, 4) == 0 and stirling(3, -1) == 0
    assert [bell(n) for n in range(8)] == [1, 1, 2, 5, 15, 52, 203, 877]


def test_stirling_recurrence():
    for n in range(1, 15):
        for k in range(1, n + 1):
            assert stirling(n, k) == k * stirling(n - 1, k) + stirling(n - 1, k - 1)


# ─────────────────────────────────────────────────────────────────────────────
# Census
# ─────────────────────────────────────────────────────────────────────────────

def test_census_totals(census_six):
    """Test 8: Four cells carry 3 type A and 11 type B corners in total."""
    by_n_a = census_six.by_n(census_six.totals(A))
    by_n_b = census_six.by_n(census_six.totals(B))
    assert by_n_a[4] == 3
    assert by_n_b[4] == 11
    assert by_n_b[3] == 5
    assert census_six.record(3, 2).total_b == 3
    assert census_six.record(0, 0).count == 1
    assert census_six.per_ab_table(A, 1, 1)[(3, 2)] == 1


def test_census_b_minus_a_is_count(census_six):
    """Test 9: Per (n, k) the B total exceeds the A total by the number of bargraphs."""
    for (n, k), rec in census_six.records.items():
        if n:
            assert rec.total_b - rec.total_a == rec.count


def test_census_merge_and_workers(census_six):
    """Test 10: Splitting the census across processes changes nothing."""
    parallel = census_bargraphs(6, workers=2)
    assert parallel.rows() == census_six.rows()
    left = census_bargraphs(3)
    right = census_bargraphs(3)
    doubled = left.merge(right)
    assert doubled.record(3, 2).count == 2 * census_six.record(3, 2).count


def test_setpartition_census():
    """Test 11: Set-partition census keyed by (n, blocks)."""
    table = census_setpartitions(4)
    assert table.record(1, 1).total_b == 1
    assert table.record(3, 2).count == 3
    assert table.record(3, 2).total_a == 1
    assert sum(rec.count for (n, _), rec in table.records.items() if n == 4) == 15


@pytest.mark.slow
def test_full_range_censuses():
    """B_11 set partitions and the 2^17 bargraphs of 18 cells, with B - A = count on every nonempty key."""
    partitions = census_setpartitions(11)
    assert partitions.by_n(partitions.counts())[11] == 678570 == bell(11)
    bargraphs = census_bargraphs(18)
    assert bargraphs.by_n(bargraphs.counts())[18] == 2**17
    assert all(rec.total_b - rec.total_a == rec.count for (n, _), rec in bargraphs.records.items() if n > 0)


def test_census_bounds():
    """Test 12: Resource bounds are configuration errors."""
    with pytest.raises(ConfigurationError):
        census_bargraphs(500)
    with pytest.raises(ConfigurationError):
        census_setpartitions(500)


def test_weighted_census():
    """Test 13: Weight 2 on every A corner sums 2^(#A) per (n, k)."""
    table = corner_weight_census(4, A, Marking.all(2))
    expected: Counter = Counter()
    for n in range(5):
        for g in enumerate_bargraphs(n):
            expected[(g.cells, g.columns)] += Fraction(2) ** corner_counts(g)[0]
    assert table == dict(expected)
    assert table[(3, 2)] == 3  # "12" -> 1, "21" -> 2
