"""The batch front end: selection, formats, exit codes, determinism."""

import json
import subprocess
import sys

import pytest

from qpartid.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_verify_single_family_grid_override(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--family", "result1", "--n-max", "8", "--m-max", "8"
    )
    assert code == 0
    assert "result1: 81 cases, ok" in out


def test_verify_unknown_family(capsys):
    code, _, err = run_cli(capsys, "verify", "--family", "no_such_id")
    assert code == 2
    assert "unknown identity id" in err


def test_verify_requires_selection(capsys):
    code, _, err = run_cli(capsys, "verify")
    assert code == 2
    assert "--family" in err


def test_verify_preset_conflicts_with_overrides(capsys):
    code, _, err = run_cli(
        capsys, "verify", "--preset", "desk", "--family", "delta", "--n-max", "3"
    )
    assert code == 2
    assert "preset" in err


def test_verify_rejects_malformed_set(capsys):
    code, _, err = run_cli(
        capsys, "verify", "--family", "resdbl1", "--a-set", "1,x"
    )
    assert code == 2
    assert "--a-set" in err
    code, _, err = run_cli(capsys, "verify", "--family", "delta", "--n-max", "-2")
    assert code == 2


def test_verify_json_report_shape(capsys):
    code, out, _ = run_cli(
        capsys,
        "verify",
        "--family",
        "delta",
        "--n-max",
        "2",
        "--m-max",
        "2",
        "--format",
        "json",
    )
    assert code == 0
    report = json.loads(out)
    assert set(report) == {"version", "config", "results", "totals", "timing"}
    assert report["totals"] == {"cases": 9, "passes": 9, "failures": 0}
    row = report["results"][0]
    assert set(row) == {"id", "params", "pass", "first_mismatch", "lhs_hash", "rhs_hash"}
    assert report["config"]["families"] == ["delta"]


def test_verify_sets_override_abc(capsys):
    code, out, _ = run_cli(
        capsys,
        "verify",
        "--family",
        "resdbl1",
        "--n-max",
        "2",
        "--m-max",
        "2",
        "--p-max",
        "2",
        "--a-set",
        "0",
        "--b-set",
        "1",
        "--c-set",
        "1,2",
        "--format",
        "json",
    )
    assert code == 0
    report = json.loads(out)
    assert report["totals"]["cases"] == 3 * 3 * 3 * 1 * 1 * 2


def test_injected_failure_exits_one_with_case_in_report(capsys):
    code, out, _ = run_cli(
        capsys,
        "verify",
        "--family",
        "delta",
        "--n-max",
        "2",
        "--m-max",
        "2",
        "--inject-failure",
        "--format",
        "json",
    )
    assert code == 1
    report = json.loads(out)
    failing = [r for r in report["results"] if not r["pass"]]
    assert len(failing) == 1
    assert failing[0]["first_mismatch"] is not None
    assert report["totals"]["failures"] == 1


def test_json_determinism_modulo_timing(capsys, tmp_path):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    for path in paths:
        code = main(
            [
                "verify",
                "--family",
                "result2",
                "--family",
                "comb02",
                "--n-max",
                "4",
                "--m-max",
                "4",
                "--format",
                "json",
                "--out",
                str(path),
            ]
        )
        assert code == 0
    capsys.readouterr()
    reports = []
    for path in paths:
        data = json.loads(path.read_text())
        data.pop("timing")
        reports.append(json.dumps(data, sort_keys=True))
    assert reports[0] == reports[1]


def test_tsv_report_is_complete(capsys):
    code, out, _ = run_cli(
        capsys,
        "verify",
        "--family",
        "result1",
        "--n-max",
        "3",
        "--m-max",
        "3",
        "--format",
        "tsv",
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0].startswith("id\tparams\tpass")
    assert len(lines) == 1 + 16


def test_parallel_matches_serial(capsys, tmp_path):
    base = [
        "verify",
        "--family",
        "delta",
        "--family",
        "result1",
        "--family",
        "comb01",
        "--n-max",
        "4",
        "--m-max",
        "4",
        "--format",
        "json",
    ]
    serial, parallel = tmp_path / "serial.json", tmp_path / "parallel.json"
    assert main(base + ["--workers", "1", "--out", str(serial)]) == 0
    assert main(base + ["--workers", "2", "--out", str(parallel)]) == 0
    capsys.readouterr()
    a = json.loads(serial.read_text())
    b = json.loads(parallel.read_text())
    a.pop("timing"), b.pop("timing")
    a["config"].pop("workers"), b["config"].pop("workers")
    assert a == b


def test_workers_env_default(monkeypatch):
    from qpartid.cli import build_parser

    monkeypatch.setenv("QPARTID_WORKERS", "3")
    args = build_parser().parse_args(["verify", "--all"])
    assert args.workers == 3


def test_table_examples(capsys):
    assert run_cli(capsys, "table", "--func", "Pn", "--n", "5")[1] == "7\n"
    assert run_cli(capsys, "table", "--func", "P", "--n", "5", "--m", "2", "--p", "3")[1] == "1\n"
    assert run_cli(capsys, "table", "--func", "Q", "--n", "0", "--m", "0", "--p", "0")[1] == "1\n"
    code, out, _ = run_cli(
        capsys, "table", "--func", "P", "--n", "5", "--m", "2", "--p", "3", "--format", "tsv"
    )
    assert code == 0
    assert out == "n\tm\tp\tvalue\n5\t2\t3\t1\n"
    # unbounded part size when --p is omitted
    assert run_cli(capsys, "table", "--func", "P", "--n", "4", "--m", "2")[1] == "2\n"


def test_table_missing_parameter(capsys):
    code, _, err = run_cli(capsys, "table", "--func", "P", "--n", "5")
    assert code == 2
    assert "requires --m" in err


def test_gauss_output(capsys):
    code, out, _ = run_cli(capsys, "gauss", "--m", "2", "--p", "2")
    assert code == 0
    assert out.splitlines() == ["1 + q + 2q^2 + q^3 + q^4", "coeffs: 1 1 2 1 1"]
    assert run_cli(capsys, "gauss", "--m", "0", "--p", "9")[1].splitlines()[0] == "1"
    code, out, _ = run_cli(capsys, "gauss", "--m", "1", "--p", "2", "--base", "2")
    assert out.splitlines()[0] == "1 + q^2 + q^4"
    assert run_cli(capsys, "gauss", "--m", "1", "--p", "1", "--base", "0")[0] == 2


def test_oracle_diff(capsys):
    code, out, _ = run_cli(capsys, "oracle-diff", "--n-max", "8")
    assert code == 0
    assert "285 cases" in out  # sum over n<=8 of (n+1)^2
    code, out, _ = run_cli(capsys, "oracle-diff", "--n-max", "0", "--format", "json")
    assert code == 0
    assert json.loads(out)["totals"]["cases"] == 1


def test_oracle_diff_over_limit(capsys):
    code, _, err = run_cli(capsys, "oracle-diff", "--n-max", "1000")
    assert code == 2
    assert "oracle limit" in err
    # a lowered limit bites even below the default
    code, _, err = run_cli(capsys, "oracle-diff", "--n-max", "8", "--oracle-limit", "5")
    assert code == 2
    code, _, _ = run_cli(capsys, "oracle-diff", "--n-max", "5", "--oracle-limit", "5")
    assert code == 0


def test_argparse_usage_error_exit_code(capsys):
    assert run_cli(capsys, "verify", "--format", "yaml")[0] == 2
    assert run_cli(capsys, "nonsense")[0] == 2


def test_console_entry_point_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "qpartid", "gauss", "--m", "2", "--p", "2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == "1 + q + 2q^2 + q^3 + q^4"
