"""CLI dispatch, exit codes, and JSON report round-trips."""

import json

import pytest

from sylowpi.cli import (
    EXIT_DISAGREE,
    EXIT_ERROR,
    EXIT_FALSE,
    EXIT_TRUE,
    run,
)


def run_cli(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_check_true_verdict(capsys):
    code, out, _ = run_cli(capsys, "check", "--group", "Spor:M11", "--pi", "5,11")
    assert code == EXIT_TRUE
    assert "Condition II(1)" in out


def test_check_false_verdict(capsys):
    code, out, _ = run_cli(capsys, "check", "--group", "Alt:5", "--pi", "2,3")
    assert code == EXIT_FALSE
    assert "no condition holds" in out


def test_check_factors(capsys):
    code, out, _ = run_cli(capsys, "check", "--factors", "Alt:5,Cyclic:7",
                           "--pi", "2,3,5")
    assert code == EXIT_TRUE


def test_check_json_round_trip(capsys):
    code, out, _ = run_cli(capsys, "check", "--group", "Spor:M11",
                           "--pi", "5,11", "--json")
    assert code == EXIT_TRUE
    report = json.loads(out)
    assert report["schema"] == 1
    assert report["dpi"] is True
    assert report["witness"]["condition"] == "II"
    assert report["witness"]["subcase"] == 1
    # idempotent re-rendering
    assert json.loads(json.dumps(report, indent=2, sort_keys=True)) == report


def test_parse_errors_exit_2(capsys):
    code, _, err = run_cli(capsys, "check", "--group", "Alt:banana", "--pi", "2")
    assert code == EXIT_ERROR and "error" in err
    code, _, err = run_cli(capsys, "check", "--group", "Alt:5", "--pi", "2,4")
    assert code == EXIT_ERROR
    code, _, err = run_cli(capsys, "check", "--group", "Alt:5", "--pi", "2,2")
    assert code == EXIT_ERROR  # duplicates rejected
    code, _, err = run_cli(capsys, "check", "--pi", "2")
    assert code == EXIT_ERROR  # neither --group nor --factors


def test_brute_exit_codes(capsys):
    code, out, _ = run_cli(capsys, "brute", "--group", "Alt:5", "--pi", "2,3")
    assert code == EXIT_FALSE
    assert "epi = True" in out and "dpi = False" in out
    code, out, _ = run_cli(capsys, "brute", "--group", "Alt:5", "--pi", "5")
    assert code == EXIT_TRUE


def test_brute_json(capsys):
    code, out, _ = run_cli(capsys, "brute", "--group", "Alt:5",
                           "--pi", "2,3", "--json")
    report = json.loads(out)
    assert report["schema"] == 1
    assert report["hall_order"] == 12
    assert report["epi"] is True and report["dpi"] is False
    assert sorted(c["order"] for c in report["maximal_classes"]) == [6, 12]


def test_brute_bound_error(capsys):
    code, _, err = run_cli(capsys, "brute", "--group", "Spor:M11", "--pi", "2,3")
    assert code == EXIT_ERROR


def test_crosscheck(capsys):
    code, out, _ = run_cli(capsys, "crosscheck", "--group", "Lie:A:2:7")
    assert code == EXIT_TRUE
    assert "8 subsets checked, 0 disagreements" in out


def test_crosscheck_json(capsys):
    code, out, _ = run_cli(capsys, "crosscheck", "--group", "Alt:5", "--json")
    report = json.loads(out)
    assert report["subsets_checked"] == 8
    assert report["disagreements"] == 0
    assert all(row["agree"] for row in report["rows"])


def test_split(capsys):
    code, out, _ = run_cli(capsys, "split", "--factors", "Alt:5,Cyclic:7",
                           "--sigma", "5", "--tau", "7")
    assert code == EXIT_TRUE
    assert "hypothesis (1)" in out
    code, _, _ = run_cli(capsys, "split", "--factors", "Alt:5",
                         "--sigma", "2,3", "--tau", "5")
    assert code == EXIT_FALSE
    code, _, err = run_cli(capsys, "split", "--factors", "Alt:5",
                           "--sigma", "2,3", "--tau", "3")
    assert code == EXIT_ERROR  # overlap


def test_tables(capsys):
    code, out, _ = run_cli(capsys, "tables", "--json")
    report = json.loads(out)
    assert report["schema"] == 1
    assert len(report["table2_sporadic_odd"]) == 30
    assert len(report["table3_sporadic_even"]) == 15
    assert {"group", "pi", "structure"} <= set(report["table2_sporadic_odd"][0])


def test_unknown_subcommand_rejected(capsys):
    with pytest.raises(SystemExit):
        run(["frobnicate"])
