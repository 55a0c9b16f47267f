"""Command-line interface: golden outputs, exit codes, misuse handling."""

import json
import subprocess
import sys

import pytest

from nomcode import checks, cli


def run(argv, capsys):
    """Invoke the CLI in-process; return (exit_code, stdout, stderr)."""
    try:
        code = cli.main(argv)
    except SystemExit as exc:  # argparse usage errors
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


# -- encode -------------------------------------------------------------------------

def test_encode_golden(capsys):
    code, out, _ = run(["encode", "2 3 1 5 4"], capsys)
    assert code == 0
    assert out == "1 1 1 4 4\n"


def test_encode_with_steps(capsys):
    code, out, _ = run(["encode", "5 4 1 3 6 2 8 7", "--show-steps"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 9
    assert lines[0] == "i=8  word=5 4 1 3 6 2 8 7  letter=7"
    assert lines[7] == "i=1  word=1 2 3 4 5 6 7 8  letter=1"
    assert lines[-1] == "1 1 1 3 2 2 7 7"


def test_encode_rejects_non_permutation(capsys):
    code, _, err = run(["encode", "1 1 2"], capsys)
    assert code == 1
    assert err


# -- decode -------------------------------------------------------------------------

def test_decode_all_methods_agree(capsys):
    expected = "2 3 1 5 4\n"
    for method in ("transpositions", "insertion", "cycles"):
        code, out, _ = run(["decode", "1 1 1 4 4", "--method", method], capsys)
        assert code == 0
        assert out == expected


def test_decode_as_cycles(capsys):
    code, out, _ = run(["decode", "1 1 3 2 5 3 2", "--as-cycles"], capsys)
    assert code == 0
    assert out == "(1,4,7,2)(3,6)(5)\n"


def test_decode_json(capsys):
    code, out, _ = run(["decode", "1 1 1 4 4", "--json"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert payload["code"] == [1, 1, 1, 4, 4]
    assert payload["perm"] == [2, 3, 1, 5, 4]


def test_decode_rejects_bad_code(capsys):
    code, _, err = run(["decode", "1 3 1"], capsys)
    assert code == 1
    assert err


# -- enumerate ----------------------------------------------------------------------

def test_enumerate_counts(capsys):
    for argv, expected in [
        (["enumerate", "ndsef", "4", "--count"], "14\n"),
        (["enumerate", "avoiders", "5", "--pattern", "123", "--count"], "3\n"),
        (["enumerate", "partitions", "5", "--count"], "7\n"),
    ]:
        code, out, _ = run(argv, capsys)
        assert code == 0
        assert out == expected


def test_enumerate_ndsef_lines(capsys):
    code, out, _ = run(["enumerate", "ndsef", "3"], capsys)
    assert code == 0
    assert out.splitlines() == ["1 1 1", "1 1 2", "1 1 3", "1 2 2", "1 2 3"]


def test_enumerate_json_lines(capsys):
    code, out, _ = run(["enumerate", "ndperm", "3", "--json"], capsys)
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert len(rows) == 5
    assert all(sorted(row["perm"]) == [1, 2, 3] for row in rows)


def test_enumerate_csv_golden(capsys):
    code, out, _ = run(
        ["enumerate", "avoiders", "4", "--pattern", "132", "--count", "--csv"], capsys
    )
    assert code == 0
    assert out == "n,pattern,count\n4,132,7\n"


def test_enumerate_misuse_is_a_usage_error(capsys):
    bad = [
        ["enumerate", "avoiders", "4", "--pattern", "132", "--json", "--csv"],
        ["enumerate", "ndsef", "4", "--csv"],
        ["enumerate", "ndsef", "4", "--pattern", "132"],
        ["enumerate", "avoiders", "4"],
        ["enumerate", "avoiders", "4", "--pattern", "1234"],
    ]
    for argv in bad:
        code, _, err = run(argv, capsys)
        assert code == 1, argv
        assert err


def test_enumerate_bound_refusal(capsys):
    code, _, err = run(["enumerate", "ndsef", "15"], capsys)
    assert code == 3
    assert "--unsafe-max-n" in err


def test_enumerate_unsafe_override(capsys):
    code, out, _ = run(
        ["enumerate", "ndsef", "15", "--count", "--unsafe-max-n", "15"], capsys
    )
    assert code == 0
    assert out == "9694845\n"


def test_enumerate_negative_n(capsys):
    code, _, err = run(["enumerate", "ndsef", "-2"], capsys)
    assert code == 1
    assert err


# -- verify -------------------------------------------------------------------------

def test_verify_passes(capsys):
    code, out, _ = run(["verify", "codec", "--max-n", "4"], capsys)
    assert code == 0
    lines = out.splitlines()
    assert lines[-1] == "6/6 checks passed"
    assert all(line.startswith("[PASS]") for line in lines[:-1])


def test_verify_reports_failures(capsys, monkeypatch):
    monkeypatch.setitem(
        checks.SUITES, "codec", (("always-fails", 3, lambda max_n: False),)
    )
    code, out, _ = run(["verify", "codec", "--max-n", "3"], capsys)
    assert code == 2
    lines = out.splitlines()
    assert lines[0] == "[FAIL] always-fails (n<=3)"
    assert lines[-1] == "0/1 checks passed"


def test_verify_json(capsys):
    code, out, _ = run(["verify", "codec", "--max-n", "3", "--json"], capsys)
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert len(rows) == 6
    assert all(row["ok"] for row in rows)
    assert {row["max_n"] for row in rows} == {3}


# -- tree ---------------------------------------------------------------------------

def test_tree_dot_golden(capsys):
    code, out, _ = run(["tree", "2 3 1 5 4"], capsys)
    assert code == 0
    assert out.splitlines() == [
        "digraph forest {",
        "  1;",
        "  2;",
        "  3;",
        "  4;",
        "  5;",
        "  1 -> 2 [order=1];",
        "  1 -> 3 [order=2];",
        "  4 -> 5 [order=1];",
        "}",
    ]


def test_tree_identity_has_no_edges(capsys):
    code, out, _ = run(["tree", "1 2 3"], capsys)
    assert code == 0
    assert "->" not in out
    assert {"  1;", "  2;", "  3;"} <= set(out.splitlines())


def test_tree_of_a_cycle_is_rooted_at_one(capsys):
    code, out, _ = run(["tree", "7 9 4 6 8 2 3 1 5"], capsys)
    assert code == 0
    targets = {
        int(line.split("->")[1].split()[0])
        for line in out.splitlines()
        if "->" in line
    }
    assert targets == {2, 3, 4, 5, 6, 7, 8, 9}  # every node but the root


# -- misc ---------------------------------------------------------------------------

def test_unknown_verb(capsys):
    code, _, err = run(["frobnicate"], capsys)
    assert code == 1
    assert err


def test_module_entry_point_smoke():
    proc = subprocess.run(
        [sys.executable, "-m", "nomcode", "decode", "1 1 1 4 4"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "2 3 1 5 4\n"
