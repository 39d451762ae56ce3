"""Command-line interface: output formats, determinism, exit codes."""

import io
import json

import pytest

from pathdepth.cli import (
    EXIT_BUDGET,
    EXIT_FAIL,
    EXIT_OK,
    EXIT_USAGE,
    export_ideal,
    main,
    parse_exported,
)
from pathdepth.families import cycle_ideal, path_ideal
from pathdepth.monomials import parse_ideal


def run_cli(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_phi_command():
    code, text = run_cli("phi", "5", "4", "2")
    assert code == EXIT_OK
    assert text.strip() == "3"


def test_family_commands_print_generators():
    code, text = run_cli("ipath", "4", "2")
    assert code == EXIT_OK
    assert text.strip() == str(path_ideal(4, 2))
    code, text = run_cli("jcycle", "5", "3", "--power", "2", "--format", "json")
    assert code == EXIT_OK
    rows = json.loads(text)
    assert len(rows) == len(cycle_ideal(5, 3).power(2).gens)


def test_t0_command_csv():
    code, text = run_cli("t0", "6", "4", "--format", "csv")
    assert code == EXIT_OK
    assert text.splitlines()[0] == "n,m,d,t0,alpha,r,s"
    assert text.splitlines()[1] == "6,4,2,5,3,3,2"


def test_depth_command_on_family_and_raw_ideal():
    code, text = run_cli(
        "depth", "--family", "jcycle", "--n", "6", "--m", "3", "--format", "json"
    )
    assert code == EXIT_OK
    assert json.loads(text)[0]["depth"] == 3
    code, text = run_cli(
        "depth", "--ideal", "x1*x2, x2*x3", "--nvars", "3", "--format", "json"
    )
    assert json.loads(text)[0]["depth"] == 1


def test_depth_polarization_method_agrees():
    args = ["--ideal", "x1^2, x1*x2", "--nvars", "2", "--format", "json"]
    _, a = run_cli("depth", *args)
    _, b = run_cli("depth", *args, "--method", "polarization")
    assert json.loads(a)[0]["depth"] == json.loads(b)[0]["depth"]


def test_sdepth_command_with_certificate():
    code, text = run_cli(
        "sdepth",
        "--ideal",
        "x1*x2",
        "--nvars",
        "2",
        "--certificate",
        "--format",
        "json",
    )
    assert code == EXIT_OK
    assert '"sdepth": 1' in text
    assert "K[" in text


def test_exit_codes_are_distinguishable():
    # budget exhaustion
    code, _ = run_cli(
        "sdepth", "--family", "ipath", "--n", "5", "--m", "2", "--budget", "2"
    )
    assert code == EXIT_BUDGET
    # usage: unknown claim id
    code, _ = run_cli("verify", "no-such-claim")
    assert code == EXIT_USAGE
    # usage: missing ideal specification
    with pytest.raises(SystemExit):
        run_cli("depth")
    assert EXIT_OK != EXIT_FAIL != EXIT_BUDGET != EXIT_USAGE


def test_json_and_csv_output_is_deterministic():
    argv = ("table", "--family", "ipath", "--n-max", "4", "--format", "csv")
    _, first = run_cli(*argv)
    _, second = run_cli(*argv)
    assert first == second
    argv = ("verify", "lemma-2.3", "--n-max", "4", "--format", "json")
    _, first = run_cli(*argv)
    _, second = run_cli(*argv)
    assert first == second


def test_table_contains_phi_column_matching_depth():
    code, text = run_cli(
        "table", "--family", "ipath", "--n-max", "4", "--t-max", "2",
        "--format", "json",
    )
    assert code == EXIT_OK
    for row in json.loads(text):
        assert row["depth"] == row["phi"]


def test_verify_reports_seed_and_passes():
    code, text = run_cli("verify", "lemma-1.2", "--seed", "11", "--format", "json")
    assert code == EXIT_OK
    data = json.loads(text)
    assert data["run"]["seed"] == 11
    assert data["run"]["failed"] == 0
    code, text = run_cli("verify", "lemma-2.3", "--n-max", "4", "--format", "md")
    assert code == EXIT_OK
    assert text.startswith("seed=0 node_budget=")


def test_budget_env_var(monkeypatch):
    monkeypatch.setenv("PATHDEPTH_NODE_BUDGET", "2")
    code, _ = run_cli("sdepth", "--family", "ipath", "--n", "5", "--m", "2")
    assert code == EXIT_BUDGET
    monkeypatch.setenv("PATHDEPTH_NODE_BUDGET", "nonsense")
    with pytest.raises(SystemExit):
        run_cli("sdepth", "--family", "ipath", "--n", "4", "--m", "2")


def test_export_round_trip_both_dialects():
    for ideal in (
        parse_ideal("x1^2*x2, x3", 3),
        cycle_ideal(5, 3),
        path_ideal(4, 2).power(2),
    ):
        for dialect in ("cocoa", "macaulay2"):
            script = export_ideal(ideal, dialect)
            assert parse_exported(script) == ideal


def test_export_command_output():
    code, text = run_cli(
        "export", "--family", "jcycle", "--n", "4", "--m", "2",
        "--dialect", "macaulay2",
    )
    assert code == EXIT_OK
    assert text.startswith("S = QQ[x_1..x_4];")
    assert parse_exported(text) == cycle_ideal(4, 2)
    code, text = run_cli(
        "export", "--ideal", "x1^2", "--nvars", "2", "--dialect", "cocoa"
    )
    assert code == EXIT_OK
    assert "x[1]^2" in text
