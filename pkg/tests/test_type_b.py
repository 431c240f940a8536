import pytest

from algebra.jet import Jet
from algebra.series import SeriesRing
from combinatorics.census import CensusTable, census_bargraphs
from genfuncs.marking import Marking
from genfuncs.type_b import printed
from genfuncs.type_b.closed_form import chain_sums_b, closed_form_b, closed_form_first_height_b
from genfuncs.type_b.kernels import drop_kernel, plateau_drop_series
from genfuncs.type_b.solver import solve_system_b
from utils.errors import UsageError
from utils.models import CornerKind
from verification.compare import compare_series, first_discrepancy, series_table, univariate_table

CAP = 8


@pytest.fixture(scope="module")
def census() -> CensusTable:
    return census_bargraphs(CAP)


@pytest.fixture
def ring() -> SeriesRing:
    return SeriesRing(CAP, CAP)


# ─────────────────────────────────────────────────────────────────────────────
# Solver and closed form
# ─────────────────────────────────────────────────────────────────────────────

def test_unmarked_series_counts_bargraphs(ring):
    """Test 1: Without marks J is the composition series and μ vanishes."""
    expected = (1 - ring.x) / (1 - ring.x - ring.x * ring.y)
    assert solve_system_b(CAP, CAP).J == expected
    assert closed_form_b(CAP, CAP) == expected
    assert drop_kernel(3, 1, Marking.unmarked(), CAP, CAP).is_zero()


def test_all_marks_derivative_is_census(census):
    """Test 2: The derivative part counts type B corners per (cells, columns)."""
    J = solve_system_b(CAP, CAP, Marking.all()).J
    assert first_discrepancy(census.totals(CornerKind.B), series_table(J, "deriv")) is None
    assert J.coefficient(3, 2) == Jet(2, 3)


def test_single_mark_derivative_is_census(census):
    """Test 3: Marking only (1,1) corners counts exactly those."""
    J = solve_system_b(CAP, CAP, Marking.single(1, 1)).J
    assert first_discrepancy(census.per_ab_table(CornerKind.B, 1, 1), series_table(J, "deriv")) is None


@pytest.mark.parametrize(
    "marking",
    [Marking.unmarked(), Marking.all(), Marking.all(3), Marking.single(1, 1), Marking.single(2, 1)],
    ids=lambda m: m.describe(),
)
def test_closed_form_agrees_with_solver(marking):
    """Test 4: Chain-sum closed form equals the order-by-order solution."""
    assert compare_series(solve_system_b(CAP, CAP, marking).J, closed_form_b(CAP, CAP, marking)) is None


@pytest.mark.parametrize("hmax", [None, 3])
def test_first_height_closed_form(hmax):
    """Test 5: J_a from pinned chain sums equals the solver's J_a."""
    marking = Marking.all()
    solution = solve_system_b(CAP, CAP, marking, hmax)
    for a in range(1, 4):
        closed = closed_form_first_height_b(a, CAP, CAP, marking, hmax)
        solved = solution.J_a.get(a, closed.zero(CAP, CAP))
        assert compare_series(solved, closed) is None, f"first height {a}"


def test_plateau_drop_series():
    """Test 6: γ_2 marks the plateau 2^m with its final drop (m, 2)."""
    gamma = plateau_drop_series(2, Marking.all(), 6, 6)
    assert gamma.coefficient(2, 1) == Jet(1, 1)
    assert gamma.coefficient(4, 2) == Jet(1, 1)
    assert gamma.coefficient(3, 1) == 0


def test_solver_rejects_bad_arguments():
    with pytest.raises(UsageError):
        solve_system_b(4, -2)
    with pytest.raises(UsageError):
        solve_system_b(4, 4, hmax=0)


# ─────────────────────────────────────────────────────────────────────────────
# Printed forms
# ─────────────────────────────────────────────────────────────────────────────

def test_total_gf_mismatch(census):
    """Test 7: H(x,y) is wrong from x^3 y^2 on: three corners, not two."""
    found = first_discrepancy(census.totals(CornerKind.B), series_table(printed.gf_total_b_printed(CAP, CAP)))
    assert found is not None
    assert found.index == [3, 2]
    assert (found.expected, found.got) == ("3", "2")


def test_total_gf_x1_mismatch(census):
    """Test 8: H(x,1) agrees up to three cells and gives 12 instead of 11 at four."""
    by_n = census.by_n(census.totals(CornerKind.B))
    found = first_discrepancy({(n,): c for n, c in by_n.items()}, univariate_table(printed.gf_total_b_x1_printed(CAP)))
    assert found is not None
    assert found.index == [4]
    assert (found.expected, found.got) == ("11", "12")


def test_restricted_j1_matches_solver():
    """Test 9: Height one leaves only the plateaus 1^m, each with one corner (m,1)."""
    truth = solve_system_b(CAP, CAP, Marking.all(), hmax=1).J
    assert compare_series(truth, printed.restricted_j1_b(CAP, CAP)) is None
    assert printed.restricted_j1_b(CAP, CAP).coefficient(3, 3) == Jet(1, 1)


def test_restricted_j1_single_mark():
    """Test 10: Marking (2,1) leaves every plateau but 11 unmarked."""
    marking = Marking.single(2, 1)
    j1 = printed.restricted_j1_b(CAP, CAP, marking)
    assert j1.coefficient(2, 2) == Jet(1, 1)
    assert j1.coefficient(3, 3) == 1


def test_vw_chain_display_mismatch():
    """Test 11: Γ_1 for (1,1) starts at x^2 but the display puts a marked xy term first."""
    marking = Marking.single(1, 1)
    chains = chain_sums_b(CAP, CAP, marking, CAP)
    display = printed.vw_chain_display_b(1, 1, 1, CAP, CAP, marking)
    assert display.coefficient(1, 1) == Jet(0, 1)
    found = compare_series(chains.total(1), display, prefix=(1, 1, 1))
    assert found is not None
    assert found.index == [1, 1, 1, 1, 1]
    assert (found.part, found.expected, found.got) == ("deriv", "0", "1")


def test_vw_display_mismatch():
    """Test 12: Built from the displayed Γ_j, the (1,1) series marks a corner of 11."""
    marking = Marking.single(1, 1)
    display = printed.vw_display_b(1, 1, CAP, CAP, marking)
    assert compare_series(solve_system_b(CAP, CAP).J, display.value_part()) is None
    found = compare_series(solve_system_b(CAP, CAP, marking).J, display, prefix=(1, 1))
    assert found is not None
    assert found.index == [1, 1, 2, 2]
    assert (found.part, found.expected, found.got) == ("deriv", "0", "1")


def test_vw_gf_mismatch(census):
    """Test 13: T(x,y) for (1,1) counts two corners on 11, which has none."""
    table = census.per_ab_table(CornerKind.B, 1, 1)
    found = first_discrepancy(table, series_table(printed.gf_vw_b_printed(1, 1, CAP, CAP)), prefix=(1, 1))
    assert found is not None
    assert found.index == [1, 1, 2, 2]
    assert (found.expected, found.got) == ("0", "2")


def test_vw_gf_x1_mismatch(census):
    """Test 14: T(x,1) for (1,1) agrees on one cell and gives 2 instead of 0 on two."""
    by_n = census.by_n(census.per_ab_table(CornerKind.B, 1, 1))
    found = first_discrepancy(
        {(n,): c for n, c in by_n.items()}, univariate_table(printed.gf_vw_b_x1_printed(1, 1, CAP)), prefix=(1, 1)
    )
    assert found is not None
    assert found.index == [1, 1, 2]
    assert (found.expected, found.got) == ("0", "2")
