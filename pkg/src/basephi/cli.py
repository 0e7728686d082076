"""Command-line front end: expand, enumerate, count, classify, sequence, verify.

All subcommands are argv-only (nothing is read from the environment), write
data to stdout and diagnostics to stderr, and exit with 0 on success, 1 on a
verification or cross-check failure, 2 on a usage or domain error, and 3 on a
guard-bound refusal.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Callable, Optional, Sequence

from .bergman import bergman_greedy, bergman_recursive, classify_lucas_interval
from .counting import tot_fib, tot_kappa, tot_nu
from .enumeration import enumerate_knott, enumerate_natural
from .errors import DomainError, GuardBoundError
from .verify import run_all, run_suite
from .words import block_factorization

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_GUARD = 3

_COUNTERS: dict[str, Callable[[int], int]] = {
    "kappa": tot_kappa,
    "nu": tot_nu,
    "fib": tot_fib,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="basephi",
        description="Exact base-phi numeration: Bergman expansions, "
        "enumeration and counting of golden-mean representations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="print the Bergman expansion of N")
    p.add_argument("n", type=int)
    p.add_argument(
        "--method",
        choices=("greedy", "recursive", "both"),
        default="greedy",
        help="constructor to use; 'both' cross-checks the two and fails on mismatch",
    )

    p = sub.add_parser("enumerate", help="print every expansion of N")
    p.add_argument("n", type=int)
    p.add_argument("--mode", choices=("knott", "natural"), default="knott")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p = sub.add_parser("count", help="print the number of expansions of N")
    p.add_argument("n", type=int)
    p.add_argument("--what", choices=("kappa", "nu", "fib"), default="kappa")

    p = sub.add_parser("sequence", help="print a counting sequence over a range")
    p.add_argument("--what", choices=("kappa", "nu", "fib"), required=True)
    p.add_argument("--from", dest="start", type=int, required=True, metavar="A")
    p.add_argument("--to", dest="stop", type=int, required=True, metavar="B")
    p.add_argument("--format", choices=("text", "csv"), default="text")

    p = sub.add_parser("classify", help="locate N in the Lucas interval partition")
    p.add_argument("n", type=int)

    p = sub.add_parser("verify", help="run theorem-verification suites")
    p.add_argument("--suite", default="all", help="suite name, or 'all' (default)")
    p.add_argument("--bound", type=int, default=None, help="override the suite's default bound")
    p.add_argument("--format", choices=("text", "json"), default="text")

    return parser


def _cmd_expand(args: argparse.Namespace) -> int:
    if args.method == "both":
        greedy = bergman_greedy(args.n)
        recursive = bergman_recursive(args.n)
        if greedy != recursive:
            print(
                f"mismatch for {args.n}: greedy {greedy}, recursive {recursive}",
                file=sys.stderr,
            )
            return EXIT_FAILURE
        print(greedy)
        return EXIT_OK
    build = bergman_greedy if args.method == "greedy" else bergman_recursive
    print(build(args.n))
    return EXIT_OK


def _cmd_enumerate(args: argparse.Namespace) -> int:
    expand = enumerate_knott if args.mode == "knott" else enumerate_natural
    expansions = expand(args.n)
    if args.format == "json":
        payload = {
            "n": args.n,
            "mode": args.mode,
            "expansions": [{"word": str(w), "L": w.L, "R": w.R} for w in expansions],
        }
        print(json.dumps(payload))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        for w in expansions:
            writer.writerow((str(w), w.L, w.R))
    else:
        for w in expansions:
            print(w)
    return EXIT_OK


def _cmd_count(args: argparse.Namespace) -> int:
    print(_COUNTERS[args.what](args.n))
    return EXIT_OK


def _cmd_sequence(args: argparse.Namespace) -> int:
    counter = _COUNTERS[args.what]
    if args.stop < args.start:
        raise DomainError(f"empty range: --from {args.start} exceeds --to {args.stop}")
    if args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        for n in range(args.start, args.stop + 1):
            writer.writerow((n, counter(n)))
    else:
        for n in range(args.start, args.stop + 1):
            print(counter(n))
    return EXIT_OK


def _cmd_classify(args: argparse.Namespace) -> int:
    info = classify_lucas_interval(args.n)
    beta = bergman_greedy(args.n)
    s1 = block_factorization(beta).gaps[-1]
    lo, hi = info.bounds
    print(f"interval: Lambda_{info.index} = [{lo}, {hi}]")
    print(f"parity: {info.parity}")
    print(f"n: {info.n}")
    if info.subinterval is None:
        print("subinterval: none")
    else:
        s_lo, s_hi = info.subinterval.bounds
        print(f"subinterval: {info.subinterval.kind}_{info.n} = [{s_lo}, {s_hi}]")
    print(f"L: {beta.L}")
    print(f"R: {beta.R}")
    print(f"s1: {s1}")
    print(f"s1_parity: {'even' if s1 % 2 == 0 else 'odd'}")
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.suite == "all":
        reports = run_all(args.bound)
    else:
        reports = [run_suite(args.suite, args.bound)]
    if args.format == "json":
        payload = {
            "suites": [r.to_dict() for r in reports],
            "passed": all(r.passed for r in reports),
        }
        print(json.dumps(payload))
    else:
        for r in reports:
            status = "PASS" if r.passed else "FAIL"
            print(
                f"{r.suite}: {status} ({r.checks} checks, {len(r.failures)} failures, "
                f"{r.elapsed_ms:.0f} ms, bound {r.bound})"
            )
            for f in r.failures:
                print(f"  {f.input}: expected {f.expected}, got {f.actual}")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAILURE


HANDLERS: dict[str, Callable[[argparse.Namespace], int]] = {
    "expand": _cmd_expand,
    "enumerate": _cmd_enumerate,
    "count": _cmd_count,
    "sequence": _cmd_sequence,
    "classify": _cmd_classify,
    "verify": _cmd_verify,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 0 for --help and 2 for usage errors.
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return HANDLERS[args.command](args)
    except GuardBoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
