import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from nodalsextic.cli import main
from nodalsextic.data import read_data


@pytest.fixture
def runner():
    return CliRunner()


def test_code_info(runner):
    result = runner.invoke(main, ["code", "info"])
    assert result.exit_code == 0
    assert "rank: 13" in result.output
    assert "8192" in result.output


def test_code_info_json(runner):
    result = runner.invoke(main, ["code", "info", "--json"])
    data = json.loads(result.output)
    assert data["min_weight"] == 16 and data["min_weight_count"] == 26


def test_code_enumerate_weights(runner):
    result = runner.invoke(main, ["code", "enumerate", "--weights", "--json"])
    weights = json.loads(result.output)["weights"]
    assert sum(weights.values()) == 8192


def test_code_minwords(runner):
    result = runner.invoke(main, ["code", "minwords"])
    assert result.exit_code == 0
    assert len(result.output.split()) == 26


def test_code_sum(runner):
    result = runner.invoke(main, ["code", "sum", "1", "2", "3", "5", "17", "--json"])
    data = json.loads(result.output)
    assert data["weight"] == 36 and data["cardinality"] == 35


def test_code_sum_rejects_bad_index(runner):
    result = runner.invoke(main, ["code", "sum", "27"])
    assert result.exit_code != 0


def test_code_decompose(runner):
    result = runner.invoke(main, ["code", "decompose", "--target", "1 2 3 5 17", "--json"])
    data = json.loads(result.output)
    assert data["count"] == 18
    assert [1, 2, 3, 5, 17] in data["subsets"]


def test_code_chi_and_bounds(runner):
    assert runner.invoke(main, ["code", "chi", "--m", "0", "--nodes", "35"]).output.strip() == "6"
    out = runner.invoke(main, ["code", "bounds", "--d", "6"]).output
    assert "200/3" in out and "65" in out


def test_barth_poly(runner):
    result = runner.invoke(main, ["barth", "poly"])
    assert result.exit_code == 0
    assert "x0^6" in result.output


def test_detrep_verify(runner):
    result = runner.invoke(main, ["detrep", "verify"])
    assert result.exit_code == 0
    assert "match" in result.output


def test_report_sections_subset(runner, tmp_path):
    out = tmp_path / "report.json"
    result = runner.invoke(
        main,
        ["report", "all", "--sections", "code,minwords,wsum,chi,bounds", "--json", str(out)],
    )
    assert result.exit_code == 0
    data = json.loads(out.read_text())
    assert data["overall"] == "pass"
    assert [s["name"] for s in data["sections"]] == ["code", "minwords", "wsum", "chi", "bounds"]


def test_report_skips_dependents_of_failed_section(runner, tmp_path, monkeypatch):
    # Corrupt the generator file in an override directory: the code census must
    # fail and everything downstream of it must be skipped, not run.
    override = tmp_path / "data"
    override.mkdir()
    for name in ("extended_code_generators.txt", "minimal_codewords.txt", "barth_matrix_A.txt"):
        (override / name).write_text(read_data(name))
    rows = read_data("extended_code_generators.txt").splitlines()
    (override / "extended_code_generators.txt").write_text("\n".join(rows[:12] + [rows[0]]) + "\n")
    monkeypatch.setenv("NODALSEXTIC_DATA", str(override))

    result = runner.invoke(
        main,
        ["report", "all", "--sections", "code,minwords,wsum,chi", "--json", str(tmp_path / "r.json")],
    )
    assert result.exit_code == 1
    data = json.loads((tmp_path / "r.json").read_text())
    status = {s["name"]: s["status"] for s in data["sections"]}
    assert status["code"] == "fail"
    assert status["minwords"] == "skipped"
    assert status["wsum"] == "skipped"
    assert status["chi"] == "pass"  # independent of the code census


def test_data_override_roundtrip(tmp_path, monkeypatch):
    baseline = read_data("minimal_codewords.txt")
    override = tmp_path / "data"
    override.mkdir()
    (override / "minimal_codewords.txt").write_text(baseline)
    monkeypatch.setenv("NODALSEXTIC_DATA", str(override))
    assert read_data("minimal_codewords.txt") == baseline
