"""The command-line interface: output formats, exit codes, round trips."""

import json

from expected import FIB_0_24, KAPPA_0_20, NU_0_20

from basephi import cli, verify
from basephi.bergman import bergman_greedy
from basephi.enumeration import enumerate_knott
from basephi.errors import GuardBoundError
from basephi.words import DigitWord


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_expand(capsys):
    code, out, _ = run_cli(capsys, "expand", "4")
    assert (code, out) == (0, "101.01\n")
    code, out, _ = run_cli(capsys, "expand", "0")
    assert (code, out) == (0, "0\n")
    code, out, _ = run_cli(capsys, "expand", "5", "--method", "recursive")
    assert (code, out) == (0, "1000.1001\n")
    code, out, _ = run_cli(capsys, "expand", "100", "--method", "both")
    assert code == 0 and out.strip() == str(bergman_greedy(100))


def test_expand_both_mismatch_exits_1(capsys, monkeypatch):
    monkeypatch.setattr(cli, "bergman_recursive", lambda n: bergman_greedy(n + 1))
    code, out, err = run_cli(capsys, "expand", "7", "--method", "both")
    assert code == 1
    assert out == ""
    assert "mismatch" in err


def test_expand_negative_exits_2(capsys):
    code, _, err = run_cli(capsys, "expand", "-3")
    assert code == 2
    assert "error:" in err


def test_enumerate_text(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "4")
    assert code == 0
    assert out.splitlines() == ["100.1111", "11.1111", "101.01"]


def test_enumerate_natural(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "4", "--mode", "natural")
    assert (code, out) == (0, "101.01\n")


def test_enumerate_json(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "2", "--format", "json")
    assert code == 0
    assert json.loads(out) == {
        "n": 2,
        "mode": "knott",
        "expansions": [
            {"word": "10.01", "L": 1, "R": -2},
            {"word": "1.11", "L": 0, "R": -2},
        ],
    }


def test_enumerate_csv(capsys):
    code, out, _ = run_cli(capsys, "enumerate", "4", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["100.1111,2,-4", "11.1111,1,-4", "101.01,2,-2"]


def test_count(capsys):
    assert run_cli(capsys, "count", "14", "--what", "nu")[:2] == (0, "12\n")
    assert run_cli(capsys, "count", "14")[:2] == (0, "12\n")
    assert run_cli(capsys, "count", "12", "--what", "fib")[:2] == (0, "1\n")
    assert run_cli(capsys, "count", "0", "--what", "kappa")[:2] == (0, "1\n")


def test_sequence_text(capsys):
    code, out, _ = run_cli(capsys, "sequence", "--what", "kappa", "--from", "0", "--to", "20")
    assert code == 0
    assert [int(line) for line in out.splitlines()] == KAPPA_0_20
    code, out, _ = run_cli(capsys, "sequence", "--what", "nu", "--from", "0", "--to", "20")
    assert [int(line) for line in out.splitlines()] == NU_0_20
    code, out, _ = run_cli(capsys, "sequence", "--what", "fib", "--from", "0", "--to", "24")
    assert [int(line) for line in out.splitlines()] == FIB_0_24


def test_sequence_csv(capsys):
    code, out, _ = run_cli(capsys, "sequence", "--what", "nu", "--from", "4", "--to", "6", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["4,1", "5,5", "6,5"]


def test_sequence_empty_range_exits_2(capsys):
    code, _, err = run_cli(capsys, "sequence", "--what", "fib", "--from", "5", "--to", "3")
    assert code == 2
    assert "error:" in err


def test_classify(capsys):
    code, out, _ = run_cli(capsys, "classify", "14")
    assert code == 0
    assert out.splitlines() == [
        "interval: Lambda_5 = [12, 17]",
        "parity: odd",
        "n: 2",
        "subinterval: J_2 = [14, 15]",
        "L: 5",
        "R: -6",
        "s1: 2",
        "s1_parity: even",
    ]


def test_classify_without_subinterval(capsys):
    code, out, _ = run_cli(capsys, "classify", "2")
    assert code == 0
    assert "subinterval: none" in out.splitlines()


def test_classify_rejects_small(capsys):
    assert run_cli(capsys, "classify", "1")[0] == 2


def test_verify_single_suite(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "fib-totkap", "--bound", "8")
    assert code == 0
    assert out.startswith("fib-totkap: PASS (8 checks, 0 failures,")


def test_verify_json(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--suite", "squares", "--bound", "3", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["passed"] is True
    assert payload["suites"][0]["suite"] == "squares"
    assert payload["suites"][0]["checks"] == 3


def test_verify_all_quick(capsys):
    code, out, _ = run_cli(capsys, "verify", "--bound", "5")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 12
    assert all(": PASS (" in line for line in lines)


def test_verify_unknown_suite_exits_2(capsys):
    code, _, err = run_cli(capsys, "verify", "--suite", "nope")
    assert code == 2
    assert "known suites" in err


def test_verify_failure_exits_1(capsys, monkeypatch):
    # Force one suite to report a failure and check both output and exit code.
    def broken(bound, report):
        report.check("forced", 1, 2)

    monkeypatch.setitem(verify.SUITES, "squares", (8, broken))
    code, out, _ = run_cli(capsys, "verify", "--suite", "squares")
    assert code == 1
    assert "squares: FAIL (1 checks, 1 failures," in out
    assert "forced: expected 1, got 2" in out


def test_guard_bound_exits_3(capsys, monkeypatch):
    def guarded(args):
        raise GuardBoundError("refusing: bound too large")

    monkeypatch.setitem(cli.HANDLERS, "count", guarded)
    code, _, err = run_cli(capsys, "count", "5")
    assert code == 3
    assert "refusing" in err


def test_usage_errors_exit_2(capsys):
    assert run_cli(capsys, )[0] == 2  # no subcommand
    assert run_cli(capsys, "expand")[0] == 2  # missing N
    assert run_cli(capsys, "enumerate", "4", "--format", "xml")[0] == 2
    assert run_cli(capsys, "count", "notanumber")[0] == 2


def test_help_exits_0(capsys):
    assert run_cli(capsys, "--help")[0] == 0
    assert run_cli(capsys, "expand", "--help")[0] == 0


def test_render_parse_round_trip():
    # Every expansion the CLI can print parses back to the same word.
    for n in range(0, 2000):
        beta = bergman_greedy(n)
        assert DigitWord.from_string(str(beta)) == beta
    for n in (2, 4, 14, 100):
        for w in enumerate_knott(n):
            assert DigitWord.from_string(str(w)) == w
