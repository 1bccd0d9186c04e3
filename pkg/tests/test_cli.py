import json

import pytest
from click.testing import CliRunner

from config import config
from grasskt import create_cli
from grasskt.commands import RUN_SETTINGS
from grasskt.services import charring_service
from grasskt.services.charring_service import VerificationResult
from grasskt.services.errors import InvalidParameters
from grasskt.services.poly_service import Polynomial
from grasskt.utils.report_manager import Report, emit_report


@pytest.fixture(autouse=True)
def restore_settings(monkeypatch):
    for name in RUN_SETTINGS + ("CHARRING_MAX_M", "CHARRING_MAX_ST"):
        monkeypatch.setattr(config, name, getattr(config, name))


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture(scope="module")
def cli():
    return create_cli()


def _report(result):
    return json.loads(result.stdout)


def test_snf(runner, cli):
    result = runner.invoke(cli, ["snf", "2,4,4;-6,6,12;10,-4,-16"])
    assert result.exit_code == 0
    entry = _report(result)["results"][0]
    assert entry["invariant_factors"] == [2, 6, 12]
    assert entry["cokernel"] == {"rank": 0, "invariant_factors": [2, 6, 12]}


def test_snf_rejects_bad_matrix(runner, cli):
    result = runner.invoke(cli, ["snf", "a,b;c,d"])
    assert result.exit_code == 3


def test_snf_csv(runner, cli):
    result = runner.invoke(cli, ["snf", "2,0;0,3", "--format", "csv"])
    assert result.exit_code == 0
    header = result.stdout.splitlines()[0].split(",")
    assert "cokernel.rank" in header
    assert "cokernel.invariant_factors" in header


def test_gb_quotient_group(runner, cli):
    result = runner.invoke(cli, ["gb", "x^2", "x*y", "y^2", "2*x"])
    assert result.exit_code == 0
    quotient = _report(result)["results"][0]["quotient"]
    assert quotient["rank"] == 2
    assert quotient["invariant_factors"] == [2]


def test_gb_over_rationals(runner, cli):
    result = runner.invoke(cli, ["gb", "x^2 - 2", "y^2 - 3", "--ring", "QQ"])
    assert result.exit_code == 0
    assert _report(result)["results"][0]["quotient"] == {"dimension": 4}


def test_gb_infinite_quotient(runner, cli):
    result = runner.invoke(cli, ["gb", "x^2", "--vars", "x,y"])
    assert result.exit_code == 0
    entry = _report(result)["results"][0]
    assert entry["quotient"] is None
    assert "y" in entry["note"]


def test_kgroups(runner, cli):
    result = runner.invoke(cli, ["kgroups", "--n", "8", "--k", "3", "--engine", "both"])
    assert result.exit_code == 0
    report = _report(result)
    entry = report["results"][0]
    assert entry["K0"] == {"rank": 3, "invariant_factors": [8, 8, 8]}
    assert entry["engines_agree"] is True
    assert entry["hopf_order_exponent"] == 3
    assert report["summary"] == {"cases": 1, "passed": 1, "failed": 0}
    assert "timing_ms" not in report


def test_kgroups_is_deterministic(runner, cli):
    args = ["kgroups", "--n", "8", "--k", "3", "--no-structure-constants"]
    first = runner.invoke(cli, args)
    second = runner.invoke(cli, args)
    assert first.exit_code == second.exit_code == 0
    assert first.stdout == second.stdout


def test_kgroups_markdown(runner, cli):
    result = runner.invoke(cli, ["kgroups", "--n", "8", "--k", "3", "--format", "md"])
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert "| n | k | rank K⁰ | torsion | r |" in lines
    assert "| 8 | 3 | 3 | [8, 8, 8] | 3 |" in lines


def test_kgroups_timing(runner, cli):
    result = runner.invoke(cli, ["kgroups", "--n", "8", "--k", "3", "--timing"])
    assert result.exit_code == 0
    assert "8,3" in _report(result)["timing_ms"]


@pytest.mark.parametrize("args", [
    ["kgroups", "--n", "9", "--k", "3"],
    ["kgroups", "--n", "8", "--k", "2"],
    ["kgroups", "--n", "8"],
    ["kgroups", "--range", "12..8"],
])
def test_kgroups_rejects_unsupported_cases(runner, cli, args):
    assert runner.invoke(cli, args).exit_code == 3


@pytest.mark.parametrize("args", [
    ["kgroups", "--n", "8", "--k", "3", "--engine", "bogus"],
    ["kgroups", "--n", "eight", "--k", "3"],
    ["verify", "--suite", "nope"],
    ["--log-level", "LOUD", "snf", "1"],
    ["no-such-command"],
])
def test_usage_errors_are_invalid_input(runner, cli, args):
    result = runner.invoke(cli, args)
    assert result.exit_code == 3
    assert result.stdout == ""


@pytest.mark.parametrize("args", [
    ["verify", "--suite", "charring", "--max-m", "7"],
    ["verify", "--suite", "charring", "--max-st", "4"],
    ["gb", "x^2", "x*y", "y^2", "2*x", "--max-steps", "1"],
])
def test_resource_caps_exit_one(runner, cli, args):
    result = runner.invoke(cli, args)
    assert result.exit_code == 1
    assert "ResourceCapExceeded" in result.stderr


def test_kgroups_writes_file(runner, cli, tmp_path):
    target = tmp_path / "report.json"
    result = runner.invoke(cli, ["kgroups", "--n", "8", "--k", "3", "--out", str(target)])
    assert result.exit_code == 0
    assert result.stdout == ""
    assert json.loads(target.read_text(encoding="utf-8"))["command"] == "kgroups"


def test_hopf_order(runner, cli):
    exact = _report(runner.invoke(cli, ["hopf-order", "--n", "8", "--k", "3"]))["results"][0]
    assert exact["mode"] == "exact"
    assert exact["r"] == 3
    bounds = _report(runner.invoke(cli, ["hopf-order", "--n", "10", "--k", "3"]))["results"][0]
    assert bounds == {"n": 10, "k": 3, "mode": "bounds", "r": None, "bounds": [3, 5]}


def test_cohomology(runner, cli):
    result = runner.invoke(cli, ["cohomology", "--n", "8", "--k", "3"])
    assert result.exit_code == 0
    entry = _report(result)["results"][0]
    assert entry["dimension"] == 3
    assert entry["surjective"] is True


def test_verify_charring_subset(runner, cli):
    result = runner.invoke(cli, ["verify", "--suite", "charring", "--max-m", "3", "--max-st", "1",
                                 "--case", "eq3", "--case", "delta_product"])
    assert result.exit_code == 0
    report = _report(result)
    cases = {entry["case"] for entry in report["results"]}
    assert cases == {"eq3", "delta_product", "z0_product"}
    assert report["summary"]["failed"] == 0


def test_verify_reports_failures(runner, cli, monkeypatch):
    def broken(case, params):
        return VerificationResult(case, params, False, Polynomial.constant(1))

    monkeypatch.setattr(charring_service, "verify_identity", broken)
    result = runner.invoke(cli, ["verify", "--suite", "charring", "--max-m", "3", "--max-st", "1",
                                 "--case", "eq3"])
    assert result.exit_code == 2
    report = _report(result)
    assert report["summary"]["failed"] >= 1
    assert report["results"][0]["witness"] == "1"


def test_verify_chern_suite(runner, cli):
    result = runner.invoke(cli, ["verify", "--suite", "chern"])
    assert result.exit_code == 0
    cases = [entry["case"] for entry in _report(result)["results"]]
    assert cases.count("vandermonde_det") == 12
    assert "ch_surjectivity" in cases


@pytest.mark.slow
def test_verify_all(runner, cli):
    result = runner.invoke(cli, ["verify", "--suite", "all"])
    assert result.exit_code == 0, result.stderr


def test_version(runner, cli):
    result = runner.invoke(cli, ["--version"])
    assert result.exit_code == 0
    assert "grasskt" in result.stdout


def test_empty_report():
    report = Report("verify", {})
    assert json.loads(emit_report(report))["results"] == []
    assert emit_report(report, "csv") == ""
    assert "0 of 0 cases passed" in emit_report(report, "md")
    with pytest.raises(InvalidParameters):
        emit_report(report, "xml")
