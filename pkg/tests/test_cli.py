import json

import pytest

from qig import cli
from qig.harness import SUITES


def run_cli(argv, capsys):
    code = cli.main(argv)
    return code, capsys.readouterr().out


def parse_reports(out):
    lines = [json.loads(line) for line in out.strip().splitlines()]
    assert lines[-1].get("summary") is True
    return lines[:-1], lines[-1]


def strip_elapsed(report):
    return {k: v for k, v in report.items() if k != "elapsed"}


def test_parse_dimensions():
    assert cli.parse_dimensions("3") == (3,)
    assert cli.parse_dimensions("2..5") == (2, 3, 4, 5)
    for bad in ("1", "5..2", "0..3"):
        with pytest.raises(Exception):
            cli.parse_dimensions(bad)


def test_parse_override():
    assert cli.parse_override("geodesic=1e-6") == ("geodesic", 1e-6)
    with pytest.raises(Exception):
        cli.parse_override("geodesic")


def test_metric_suite_passes(capsys):
    code, out = run_cli(["metric", "--seed", "42"], capsys)
    reports, summary = parse_reports(out)
    assert code == 0
    assert summary["fail"] == 0 and summary["error"] == 0
    assert summary["checks"] == len(reports)
    assert all(r["status"] == "pass" for r in reports)
    assert all(r["suite"] == "metric" for r in reports)


def test_reports_deterministic_modulo_elapsed(capsys):
    _, out1 = run_cli(["classify", "--seed", "7", "--trials", "50"], capsys)
    _, out2 = run_cli(["classify", "--seed", "7", "--trials", "50"], capsys)
    r1, s1 = parse_reports(out1)
    r2, s2 = parse_reports(out2)
    assert [strip_elapsed(r) for r in r1] == [strip_elapsed(r) for r in r2]
    assert s1 == s2


def test_all_runs_every_suite(capsys):
    code, out = run_cli(["all", "--trials", "20", "--n", "2..3"], capsys)
    reports, summary = parse_reports(out)
    assert code == 0
    assert set(r["suite"] for r in reports) == set(SUITES)
    assert summary["suites"] == sorted(SUITES)


def test_unknown_suite_rejected(capsys):
    with pytest.raises(SystemExit):
        cli.main(["no-such-suite"])


def test_tolerance_override_can_force_failure(capsys):
    code, out = run_cli(["born", "--tol", "born=1e-30", "--trials", "20"],
                        capsys)
    _, summary = parse_reports(out)
    assert code == 1
    assert summary["fail"] >= 1


def test_out_flag_writes_file(tmp_path, capsys):
    path = tmp_path / "report.jsonl"
    code, out = run_cli(["metric", "--out", str(path), "--trials", "20"],
                        capsys)
    assert code == 0
    assert out == ""
    reports, summary = parse_reports(path.read_text())
    assert summary["checks"] == len(reports)


def test_config_file_and_env_var(tmp_path, capsys, monkeypatch):
    config = tmp_path / "verify.json"
    config.write_text(json.dumps({"seed": 99, "dimensions": [2, 3],
                                  "trials": {"metric": 25}}))
    code, out = run_cli(["metric", "--config", str(config)], capsys)
    _, summary = parse_reports(out)
    assert code == 0
    assert summary["seed"] == 99

    monkeypatch.setenv(cli.CONFIG_ENV_VAR, str(config))
    code, out = run_cli(["metric"], capsys)
    _, summary = parse_reports(out)
    assert summary["seed"] == 99

    # explicit --seed wins over the config value
    code, out = run_cli(["metric", "--seed", "5", "--trials", "25"], capsys)
    _, summary = parse_reports(out)
    assert summary["seed"] == 5


def test_report_fields(capsys):
    _, out = run_cli(["coin", "--seed", "1"], capsys)
    reports, _ = parse_reports(out)
    for r in reports:
        assert {"suite", "check", "status", "seed",
                "max_residual", "trials", "elapsed"} <= set(r)
        assert r["status"] in ("pass", "fail", "error")
