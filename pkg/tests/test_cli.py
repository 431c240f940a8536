import csv
import io
import json

import pytest
from click.testing import CliRunner

from cli.main import cli


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


def invoke_json(runner: CliRunner, *args: str):
    result = runner.invoke(cli, list(args))
    assert result.exit_code == 0, result.output
    return json.loads(result.output)


# ─────────────────────────────────────────────────────────────────────────────
# enumerate / census
# ─────────────────────────────────────────────────────────────────────────────

def test_enumerate_bargraphs(runner):
    """Test 1: Four bargraphs with three cells, each with its corners."""
    records = invoke_json(runner, "enumerate", "--cells", "3")
    assert [r["word"] for r in records] == ["111", "12", "21", "3"]
    by_word = {r["word"]: r for r in records}
    assert by_word["21"]["corners"] == "B(1,1)@1 A(1,1)@2 B(1,1)@2"
    assert (by_word["21"]["corners_A"], by_word["21"]["corners_B"]) == (1, 2)


def test_enumerate_filters(runner):
    """Test 2: --columns and --setpart narrow or switch the objects."""
    assert len(invoke_json(runner, "enumerate", "--cells", "3", "--columns", "2")) == 2
    partitions = invoke_json(runner, "enumerate", "--cells", "3", "--setpart")
    assert [r["word"] for r in partitions] == ["111", "112", "121", "122", "123"]
    assert [r["k"] for r in partitions] == [1, 2, 2, 2, 3]
    assert len(invoke_json(runner, "enumerate", "--cells", "4", "--setpart", "--blocks", "2")) == 7


def test_enumerate_usage_errors(runner):
    """Test 3: Contradictory or out-of-bound options exit with status 2."""
    assert runner.invoke(cli, ["enumerate", "--cells", "3", "--blocks", "2"]).exit_code == 2
    assert runner.invoke(cli, ["enumerate", "--cells", "3", "--setpart", "--columns", "2"]).exit_code == 2
    assert runner.invoke(cli, ["enumerate", "--cells", "500"]).exit_code == 2


def test_census_totals(runner):
    """Test 4: Four cells carry 3 type A and 11 type B corners."""
    rows = invoke_json(runner, "census", "--cells-max", "4")
    four = [r for r in rows if r["n"] == 4]
    assert sum(r["total_A"] for r in four) == 3
    assert sum(r["total_B"] for r in four) == 11
    assert sum(r["count"] for r in four) == 8


def test_census_csv_explodes_pairs(runner):
    result = runner.invoke(cli, ["census", "--cells-max", "2", "--format", "csv"])
    assert result.exit_code == 0, result.output
    lines = result.output.splitlines()
    assert lines[0] == "n,k,count,total_A,total_B,kind,a,b,corners"
    assert "0,0,1,0,0,,,," in lines
    assert "2,1,1,0,1,B,1,2,1" in lines


# ─────────────────────────────────────────────────────────────────────────────
# series
# ─────────────────────────────────────────────────────────────────────────────

def test_series_printed_total(runner):
    """Test 5: [x^3 y^2] G = 1: only 21 has a type A corner."""
    records = invoke_json(runner, "series", "--gf", "G", "--xcap", "6")
    assert {"x": 3, "y": 2, "value": "1"} in records


def test_series_marked_solver(runner):
    """Test 6: Jet coefficients come out as value and derivative columns."""
    records = invoke_json(runner, "series", "--gf", "J", "--mark", "all", "--xcap", "4")
    assert {"x": 3, "y": 2, "value": "2", "deriv": "3"} in records
    weighted = invoke_json(runner, "series", "--gf", "H", "--mark", "all", "--weight", "2", "--xcap", "4")
    assert {"x": 3, "y": 2, "value": "3"} in weighted


def test_series_setpartitions(runner):
    """Test 7: Q_2 in t: one type A corner over partitions of [3] into two blocks."""
    records = invoke_json(runner, "series", "--gf", "Qk_A", "--k", "2", "--xcap", "6")
    assert {"t": 3, "value": "1"} in records
    products = invoke_json(runner, "series", "--gf", "Pk_A", "--k", "2", "--mark", "all", "--xcap", "4")
    assert {"t": 3, "value": "3", "deriv": "1"} in products


def test_series_usage_errors(runner):
    """Test 8: Missing parameters and bad weights exit with status 2."""
    assert runner.invoke(cli, ["series", "--gf", "Qk_A", "--xcap", "6"]).exit_code == 2
    assert runner.invoke(cli, ["series", "--gf", "T_A", "--v", "1", "--xcap", "6"]).exit_code == 2
    assert runner.invoke(cli, ["series", "--gf", "H", "--mark", "vw", "--xcap", "6"]).exit_code == 2
    assert runner.invoke(cli, ["series", "--gf", "H", "--mark", "all", "--weight", "x", "--xcap", "6"]).exit_code == 2
    assert runner.invoke(cli, ["series", "--gf", "H", "--mark", "all", "--weight", "1", "--xcap", "6"]).exit_code == 2
    assert runner.invoke(cli, ["series", "--gf", "Pk_B", "--k", "2", "--mark", "vw", "--v", "1", "--w", "1", "--xcap", "4"]).exit_code == 2
    assert runner.invoke(cli, ["series", "--gf", "H", "--xcap", "500"]).exit_code == 2
    assert runner.invoke(cli, ["series", "--gf", "Qk_A", "--k", "500", "--xcap", "6"]).exit_code == 2
    assert runner.invoke(cli, ["series", "--gf", "Pk_B", "--k", "0", "--xcap", "6"]).exit_code == 2


# ─────────────────────────────────────────────────────────────────────────────
# verify
# ─────────────────────────────────────────────────────────────────────────────

VERIFY_ARGS = [
    "verify",
    "--xcap", "6",
    "--ycap", "6",
    "--setpart-max", "4",
    "--vw-max", "1",
    "--only", "bargraph/worked-example-corners",
    "--only", "type-b/total-gf",
]


def test_verify_reports_printed_mismatch(runner):
    """Test 9: Printed mismatches are findings: exit status 0 and a witness in the report."""
    report = invoke_json(runner, *VERIFY_ARGS)
    results = {r["formula_id"]: r for r in report["results"]}
    assert set(results) == {"bargraph/worked-example-corners", "type-b/total-gf"}
    assert results["type-b/total-gf"]["status"] == "MISMATCH"
    assert results["type-b/total-gf"]["first_discrepancy"]["index"] == [3, 2]
    assert report["header"]["configuration"]["xcap"] == 6


def test_verify_writes_csv(runner, tmp_path):
    target = tmp_path / "errata.csv"
    result = runner.invoke(cli, [*VERIFY_ARGS, "--format", "csv", "--output", str(target)])
    assert result.exit_code == 0, result.output
    rows = list(csv.DictReader(io.StringIO(target.read_text(encoding="utf-8"))))
    assert list(rows[0]) == ["formula_id", "kind", "status", "index", "part", "expected", "got", "title"]
    example = rows[0]
    assert (example["formula_id"], example["status"], example["index"]) == ("bargraph/worked-example-corners", "MISMATCH", "5")
    assert (example["expected"], example["got"]) == ("B(2,2)", "none")


def test_verify_usage_errors(runner, tmp_path):
    """Test 10: Plain output cannot go to a file; unknown ids are rejected by click."""
    plain = runner.invoke(cli, [*VERIFY_ARGS, "--format", "plain", "--output", str(tmp_path / "x")])
    assert plain.exit_code == 2
    assert runner.invoke(cli, ["verify", "--only", "type-c/total-gf"]).exit_code == 2
