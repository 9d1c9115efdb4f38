"""
Test the command-line interface
"""
import csv
import io
import json

import pytest
from click.testing import CliRunner

from qgain.cli import cli
from qgain.services.families import example_c4
from qgain.utils.graph_io import save_graph


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def c4_file(tmp_path):
    path = tmp_path / "c4.json"
    save_graph(example_c4(), path)
    return str(path)


def test_rank(runner, c4_file):
    """Test the rank command prints the JSON report"""
    result = runner.invoke(cli, ["rank", c4_file])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert (data["rank"], data["bound"]["tight"]) == (2, True)


def test_rank_float(runner, c4_file):
    """Test float mode with an explicit tolerance"""
    result = runner.invoke(cli, ["rank", c4_file, "--float", "--tol", "1e-10"])
    assert result.exit_code == 0
    assert json.loads(result.output)["rank"] == 2
    result = runner.invoke(cli, ["rank", c4_file, "--float", "--tol", "0"])
    assert result.exit_code == 2


def test_rank_rejects_bad_file(runner, tmp_path):
    """Test invalid input exits with status 2 and a diagnostic"""
    path = tmp_path / "bad.json"
    path.write_text('{"vertices": [0, 1], "edges": [{"u": 0, "v": 1, "gain": "2,0,0,0"}]}')
    result = runner.invoke(cli, ["rank", str(path)])
    assert result.exit_code == 2
    assert "error:" in result.output
    assert "edges.0.gain" in result.output
    result = runner.invoke(cli, ["rank", str(tmp_path / "missing.json")])
    assert result.exit_code == 2


def test_classify(runner, c4_file):
    """Test the classify command reports verdicts"""
    result = runner.invoke(cli, ["classify", c4_file])
    assert result.exit_code == 0
    data = json.loads(result.output)
    assert data["verdicts"][0]["check"] == "cycle_extremal"
    assert data["verdicts"][0]["agree"] is True


def test_generate(runner, tmp_path):
    """Test generate writes a loadable graph file"""
    out = tmp_path / "inf.json"
    result = runner.invoke(cli, ["generate", "--family", "infinity", "--params", '{"p": 4, "l": 3, "q": 4}',
                                 "--seed", "3", "--gain-mode", "cayley", "-o", str(out)])
    assert result.exit_code == 0
    doc = json.loads(out.read_text())
    assert doc["metadata"]["rank"] == 6
    assert len(doc["vertices"]) == 9
    result = runner.invoke(cli, ["rank", str(out)])
    assert json.loads(result.output)["rank"] == 6


@pytest.mark.parametrize("params", ["{not json", "[1, 2]", '{"preset": "none"}', '{"tree_edges": 5}'])
def test_generate_rejects_bad_params(runner, tmp_path, params):
    """Test bad family parameters exit with status 2"""
    result = runner.invoke(cli, ["generate", "--family", "flower", "--params", params, "-o", str(tmp_path / "x.json")])
    assert result.exit_code == 2
    assert "error:" in result.output


def test_verify_bounds_json(runner, tmp_path):
    """Test a clean bounds run exits 0 and writes the report"""
    out = tmp_path / "report.json"
    result = runner.invoke(cli, ["verify-bounds", "--seed", "42", "--samples", "6", "--max-n", "6", "-o", str(out)])
    assert result.exit_code == 0, result.output
    report = json.loads(out.read_text())
    assert report["kind"] == "verify-bounds"
    assert report["config"]["seed"] == 42
    assert report["summary"]["zero_violations"] is True


def test_verify_bounds_csv(runner, tmp_path):
    """Test the CSV summary rows"""
    out = tmp_path / "report.csv"
    result = runner.invoke(cli, ["verify-bounds", "--seed", "1", "--samples", "4", "--cell", "6,1,0",
                                 "--format", "csv", "-o", str(out)])
    assert result.exit_code == 0
    rows = list(csv.reader(io.StringIO(out.read_text())))
    assert rows[0] == ["n", "c", "p", "rank", "bound", "tight"]
    assert len(rows) == 5
    assert all(row[:3] == ["6", "1", "0"] for row in rows[1:])


@pytest.mark.parametrize("cell", ["3,1,1", "6,1", "a,b,c"])
def test_verify_bounds_rejects_bad_cells(runner, tmp_path, cell):
    """Test infeasible or malformed cells exit with status 2"""
    result = runner.invoke(cli, ["verify-bounds", "--seed", "1", "--cell", cell, "-o", str(tmp_path / "r.json")])
    assert result.exit_code == 2


def test_verify_extremal(runner, tmp_path):
    """Test a small extremal run"""
    out = tmp_path / "extremal.json"
    result = runner.invoke(cli, ["verify-extremal", "--seed", "9", "--samples", "5", "-o", str(out)])
    assert result.exit_code == 0, result.output
    assert json.loads(out.read_text())["summary"]["zero_violations"] is True


if __name__ == "__main__":
    pytest.main([__file__])
