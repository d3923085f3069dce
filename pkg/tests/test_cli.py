"""Command-line behavior: golden outputs, formats, and exit codes."""

import csv
import io
import json

import pytest

import polybernoulli.cli as cli
from polybernoulli.reports import IdentityReport


def run(capsys, *argv):
    code = cli.main(list(argv))
    return code, capsys.readouterr().out


@pytest.mark.parametrize(
    "argv, expected",
    [
        (("number", "-n", "2", "-k", "2"), "-1/36\n"),
        (("number", "-n", "0", "-k", "-7"), "1\n"),
        (("number", "-n", "2", "-k", "-2"), "14\n"),
        (("polynomial", "-n", "1", "-k", "2"), "x + 1/4\n"),
        (
            ("polynomial", "-n", "1", "-k", "2", "--generalized"),
            "ln(c)*x + 1/4*ln(a) - 3/4*ln(b)\n",
        ),
        (("polynomial", "-n", "0", "-k", "5", "--generalized"), "1\n"),
        (
            (
                "eval", "--poly", "1", "-k", "2", "--generalized",
                "--ln-a", "1", "--ln-b", "1", "--ln-c", "1", "-x", "0",
            ),
            "-1/2\n",
        ),
    ],
)
def test_golden_outputs(capsys, argv, expected):
    code, out = run(capsys, *argv)
    assert code == 0
    assert out == expected


def test_number_generalized_renders_parameters(capsys):
    code, out = run(capsys, "number", "-n", "1", "-k", "1", "--generalized")
    assert code == 0
    assert out == "1/2*ln(a) - 1/2*ln(b)\n"


def test_json_output_round_trips(capsys):
    code, out = run(capsys, "number", "-n", "2", "-k", "2", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj == {"n": 2, "k": 2, "generalized": False, "value": "-1/36"}


def test_table_text_and_csv_agree(capsys):
    code, text_out = run(capsys, "table", "--n-max", "3", "--k-min", "-2", "--k-max", "1")
    assert code == 0
    assert text_out.splitlines()[0].split() == ["n", "k=-2", "k=-1", "k=0", "k=1"]

    code, csv_out = run(
        capsys, "table", "--n-max", "3", "--k-min", "-2", "--k-max", "1", "--format", "csv"
    )
    assert code == 0
    rows = list(csv.reader(io.StringIO(csv_out)))
    assert rows[0] == ["n", "k=-2", "k=-1", "k=0", "k=1"]
    assert rows[3] == ["2", "14", "4", "1", "1/6"]
    # Same cells in both renderings.
    assert [line.split() for line in text_out.splitlines()[1:]] == rows[1:]


def test_table_accepts_compact_flag_spellings(capsys):
    code, out = run(capsys, "table", "--nmax", "2", "--kmin", "1", "--kmax", "1", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert [row[1] for row in rows[1:]] == ["1", "1/2", "1/6"]
    code, out = run(capsys, "table", "--nmax", "1", "--kmin", "-1", "--kmax", "-1", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert [row[1] for row in rows[1:]] == ["1", "2"]


def test_verify_degenerate_range_still_passes(capsys):
    code, out = run(capsys, "verify", "--suite", "T4", "--nmax", "0")
    assert code == 0
    assert "2/2 identity checks passed" in out


def test_table_json_structure(capsys):
    code, out = run(capsys, "table", "--n-max", "2", "--k-min", "0", "--k-max", "2", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["rows"][2]["values"] == {"0": "1", "1": "1/6", "2": "-1/36"}


def test_eval_plain_number_and_polynomial(capsys):
    code, out = run(capsys, "eval", "--number", "4", "-k", "-1")
    assert code == 0
    assert out == "16\n"
    code, out = run(capsys, "eval", "--poly", "2", "-k", "1", "-x", "1/2")
    assert code == 0
    # X^2 + X + 1/6 at 1/2
    assert out == "11/12\n"


def test_eval_accepts_equals_form_for_negative_rationals(capsys):
    code, out = run(
        capsys, "eval", "--number", "1", "-k", "1", "--generalized",
        "--ln-a", "1", "--ln-b=-1/3",
    )
    assert code == 0
    assert out == "2/3\n"


def test_eval_show_series_prefixes_value(capsys):
    code, out = run(
        capsys, "eval", "--number", "2", "-k", "1", "--generalized",
        "--ln-a", "1", "--ln-b", "0", "--show-series",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("series: 1 + 1/2*t + 1/12*t^2")
    assert lines[1] == "1/6"


def test_verify_text_reports_and_exit_zero(capsys):
    code, out = run(capsys, "verify", "--suite", "C1", "--n-max", "6")
    assert code == 0
    assert "C1" in out
    assert out.strip().endswith("1/1 identity checks passed")


def test_verify_json_shape(capsys):
    code, out = run(capsys, "verify", "--suite", "T3", "--n-max", "5", "--k-min", "-1", "--k-max", "1")
    assert code == 0
    code, out = run(
        capsys, "verify", "--suite", "T3", "--n-max", "5",
        "--k-min", "-1", "--k-max", "1", "--format", "json",
    )
    assert code == 0
    obj = json.loads(out)
    assert obj["all_passed"] is True
    assert [r["id"] for r in obj["reports"]] == ["T3.18", "T3.19"]


def test_verify_failure_sets_exit_one(capsys, monkeypatch):
    failing = IdentityReport("C1", "planted failure", "0..1", "-", False, "n=0: planted")
    monkeypatch.setattr(cli, "run_suite", lambda *a, **kw: [failing])
    code, out = run(capsys, "verify", "--suite", "C1")
    assert code == 1
    assert "FAILED: 0/1 identity checks passed" in out
    assert "witness: n=0: planted" in out


def test_verify_deterministic_across_runs(capsys):
    args = ("verify", "--suite", "T1", "--n-max", "4", "--k-min", "-1", "--k-max", "1")
    _, first = run(capsys, *args)
    _, second = run(capsys, *args)
    assert first == second


@pytest.mark.parametrize(
    "argv",
    [
        ("number", "-n", "-1", "-k", "2"),
        ("eval", "--number", "1", "-k", "1", "--generalized", "--ln-a", "1", "--ln-b=-1"),
        ("eval", "--poly", "2", "-k", "1"),
        ("eval", "--number", "1", "-k", "1", "--show-series"),
        ("eval", "--number", "1", "-k", "1", "--ln-a", "1"),
        ("eval", "--number", "1", "-k", "1", "--generalized", "--ln-a", "x", "--ln-b", "1"),
        ("table", "--n-max", "3", "--k-min", "2", "--k-max", "-2"),
        ("verify", "--suite", "nonsense"),
    ],
)
def test_usage_errors_exit_two(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        cli.main(list(argv))
    assert exc.value.code == 2


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["--version"])
    assert exc.value.code == 0
    assert "polybernoulli" in capsys.readouterr().out
