import json

import pytest

from picardck import checks, cli


@pytest.fixture(scope="module")
def full_report(tmp_path_factory):
    out = tmp_path_factory.mktemp("r") / "report.json"
    code = cli.main(["verify", "all", "--out", str(out)])
    return code, out.read_text(encoding="utf-8")


def _floats(x):
    if isinstance(x, float):
        return True
    if isinstance(x, dict):
        return any(_floats(v) for v in x.values())
    if isinstance(x, list):
        return any(_floats(v) for v in x)
    return False


def test_full_run(full_report):
    code, text = full_report
    report = json.loads(text)
    assert code == 0 and report["ok"]
    assert report["schema"] == cli.REPORT_SCHEMA
    assert report["summary"] == {"pass": 32, "fail": 0, "bounded": 2}
    status = {c["id"]: c["status"] for c in report["checks"]}
    assert status["higgs.bound_S2V"] == status["curves.chase_s2w"] == "bounded"
    assert not _floats(report)


def test_deterministic(full_report, tmp_path):
    out = tmp_path / "again.json"
    cli.main(["verify", "all", "--out", str(out)])
    assert out.read_text(encoding="utf-8") == full_report[1]


def test_single_suite(capsys):
    assert cli.main(["verify", "lattice"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert {c["id"].split(".")[0] for c in report["checks"]} == {"lattice"}
    assert report["scenario"]["suites"] == ["lattice"]


def test_usage_errors(tmp_path, capsys):
    assert cli.main(["verify", "nonsense"]) == 2
    assert cli.main([]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text('{"suites": "all", "colour": 1}')
    assert cli.main(["verify", "all", "--scenario", str(bad)]) == 2
    bad.write_text("[1, 2")
    assert cli.main(["verify", "all", "--scenario", str(bad)]) == 2
    capsys.readouterr()


def test_small_truncation_fails(capsys):
    assert cli.main(["verify", "l2", "--truncation", "1"]) == 1
    report = json.loads(capsys.readouterr().out)
    failed = [c["id"] for c in report["checks"] if c["status"] == "fail"]
    assert "scenario.truncation_bound" in failed


def test_missing_axiom_fails_dependent_checks(tmp_path, capsys):
    rows = [r for r in checks.curves.default_axioms().to_rows() if r["id"] != "bogomolov_sommese"]
    sc = tmp_path / "sc.json"
    sc.write_text(json.dumps({"suites": ["higgs"], "axioms": rows}))
    assert cli.main(["verify", "all", "--scenario", str(sc)]) == 1
    report = json.loads(capsys.readouterr().out)
    status = {c["id"]: c["status"] for c in report["checks"]}
    assert status["higgs.vanishing_V"] == "fail"
    assert status["higgs.reduce_E"] == "pass"


def test_parse_scenario_validation():
    with pytest.raises(cli.ParseError):
        cli.parse_scenario('{"truncation_bound": "3"}')
    with pytest.raises(cli.UnknownSuite):
        cli.parse_scenario('{"suites": ["lattice", "bogus"]}')
    with pytest.raises(cli.ParseError):
        cli.parse_scenario('{"axioms": [{"id": "x", "group": "L^-1", "h0": -1}]}')
    sc = cli.parse_scenario('{"suites": ["motives", "lattice"], "truncation_bound": 4}')
    assert sc.suites == ["lattice", "motives"] and sc.truncation_bound == 4
