"""Verification suites: each re-checks one theorem-grade invariant over a range.

Every suite is deterministic and pure; a report carries the number of checks,
any failures (with the failing input and both values, so a discrepancy is
reproducible from the command line), and the elapsed wall time. Running all
suites at their default bounds with zero failures is the package's master
acceptance check.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Optional

from .bergman import (
    bergman_fibonacci,
    bergman_greedy,
    bergman_lucas,
    bergman_recursive,
    classify_lucas_interval,
)
from .counting import tot_fib, tot_kappa, tot_nu, totnu_via_fib
from .enumeration import brute_force_expansions, enumerate_knott, enumerate_natural
from .errors import DomainError, UnknownSuiteError
from .goldenring import fibonacci, lucas
from .words import block_factorization, reduce_to_bergman, satisfies_knott


@dataclass(frozen=True)
class Failure:
    input: str
    expected: str
    actual: str

    def to_dict(self) -> dict:
        return {"input": self.input, "expected": self.expected, "actual": self.actual}


@dataclass
class SuiteReport:
    suite: str
    bound: int
    checks: int = 0
    failures: list[Failure] = field(default_factory=list)
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, label: str, expected: object, actual: object) -> None:
        self.checks += 1
        if expected != actual:
            self.failures.append(Failure(label, repr(expected), repr(actual)))

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "bound": self.bound,
            "checks": self.checks,
            "failures": [f.to_dict() for f in self.failures],
            "elapsed_ms": round(self.elapsed_ms, 3),
            "passed": self.passed,
        }


def _suite_fib_totkap(bound: int, rep: SuiteReport) -> None:
    for n in range(1, bound + 1):
        f = fibonacci(n)
        rep.check(f"tot_kappa(F_{n})", f, tot_kappa(f))


def _suite_lucas_totkap(bound: int, rep: SuiteReport) -> None:
    for n in range(1, bound + 1):
        pair = (tot_kappa(lucas(2 * n)), tot_kappa(lucas(2 * n + 1)))
        rep.check(f"tot_kappa(L_{2*n}), tot_kappa(L_{2*n+1})", (2 * n + 1, 2 * n + 1), pair)


def _suite_totnu_fib(bound: int, rep: SuiteReport) -> None:
    for n in range(0, bound + 1):
        pair = (tot_nu(fibonacci(2 * n + 2)), tot_nu(fibonacci(2 * n + 3)))
        rep.check(
            f"tot_nu(F_{2*n+2}), tot_nu(F_{2*n+3})",
            (fibonacci(2 * n + 1), fibonacci(2 * n + 3)),
            pair,
        )


def _suite_count_bridge(bound: int, rep: SuiteReport) -> None:
    for n in range(4, bound + 1):
        rep.check(f"tot_nu({n}) vs Fibonacci side", tot_nu(n), totnu_via_fib(n))


def _suite_prop_s(bound: int, rep: SuiteReport) -> None:
    # Interval membership determines both the parity of the last gap s_1 and
    # the lowest exponent: even interval Lambda_{2n} has s_1 odd and R = -2n,
    # odd interval Lambda_{2n+1} has s_1 even and R = -(2n+2).
    for n in range(2, bound + 1):
        beta = bergman_greedy(n)
        s1 = block_factorization(beta).gaps[-1]
        info = classify_lucas_interval(n)
        if info.parity == "even":
            expected = ("odd-s1", -2 * info.n)
        else:
            expected = ("even-s1", -(2 * info.n + 2))
        actual = ("odd-s1" if s1 % 2 == 1 else "even-s1", beta.R)
        rep.check(f"s_1 parity and R for {n}", expected, actual)


def _suite_closed_forms(bound: int, rep: SuiteReport) -> None:
    for n in range(3, bound + 1):
        rep.check(f"beta(F_{n})", bergman_greedy(fibonacci(n)), bergman_fibonacci(n))
    for n in range(2, bound + 1):
        rep.check(f"beta(L_{n})", bergman_greedy(lucas(n)), bergman_lucas(n))


def _suite_oracle_equivalence(bound: int, rep: SuiteReport) -> None:
    for n in range(1, bound + 1):
        beta = bergman_greedy(n)
        raw = brute_force_expansions(n, (beta.L + 2, beta.R - 6))
        knott = sorted(
            (w for w in raw if satisfies_knott(w)), key=lambda w: (w.R, w.digit_string)
        )
        natural = [w for w in knott if w.R == beta.R]
        enum_k = list(enumerate_knott(n))
        enum_n = list(enumerate_natural(n))
        problems = []
        if knott != enum_k:
            problems.append("tail-filtered window set differs from closure")
        if natural != enum_n:
            problems.append("natural window set differs from closure")
        if len(enum_k) != tot_kappa(n):
            problems.append(f"tot_kappa={tot_kappa(n)} but {len(enum_k)} expansions")
        if len(enum_n) != tot_nu(n):
            problems.append(f"tot_nu={tot_nu(n)} but {len(enum_n)} expansions")
        rep.check(f"window oracle vs closure vs counts for {n}", [], problems)


def _suite_reachability(bound: int, rep: SuiteReport) -> None:
    for n in range(1, bound + 1):
        beta = bergman_greedy(n)
        bad = [str(w) for w in enumerate_knott(n) if reduce_to_bergman(w) != beta]
        rep.check(f"reduce_to_bergman over expansions of {n}", [], bad)


def _suite_interval_membership(bound: int, rep: SuiteReport) -> None:
    for n in range(1, bound + 1):
        fe = classify_lucas_interval(fibonacci(2 * n + 2))
        fo = classify_lucas_interval(fibonacci(2 * n + 3))
        rep.check(
            f"F_{2*n+2} in Lambda_{2*n}, F_{2*n+3} in Lambda_{2*n+1}",
            (("even", n), ("odd", n)),
            ((fe.parity, fe.n), (fo.parity, fo.n)),
        )


def _suite_squares(bound: int, rep: SuiteReport) -> None:
    for n in range(1, bound + 1):
        pair = (tot_fib(fibonacci(2 * n) ** 2), tot_fib(fibonacci(2 * n + 1) ** 2 - 2))
        rep.check(
            f"tot_fib(F_{2*n}^2), tot_fib(F_{2*n+1}^2 - 2)",
            (fibonacci(2 * n - 1), fibonacci(2 * n)),
            pair,
        )


def _suite_klarner(bound: int, rep: SuiteReport) -> None:
    for m in range(4, bound + 1):
        f_m, f_m1 = fibonacci(m), fibonacci(m + 1)
        bad = [
            n
            for n in range(f_m, f_m1 - 1)
            if tot_fib(n) != tot_fib(n - f_m) + tot_fib(f_m1 - n - 2)
        ]
        rep.check(f"reflection identity on [F_{m}, F_{m+1}-2]", [], bad)


def _suite_lucas_products(bound: int, rep: SuiteReport) -> None:
    for n in range(1, bound + 1):
        pair = (
            tot_fib(fibonacci(2 * n + 2) * lucas(2 * n)),
            tot_fib(fibonacci(2 * n + 2) * lucas(2 * n + 1)),
        )
        rep.check(f"tot_fib(F_{2*n+2}*L_{2*n}), tot_fib(F_{2*n+2}*L_{2*n+1})", (2 * n, 1), pair)


_Suite = Callable[[int, SuiteReport], None]

SUITES: dict[str, tuple[int, _Suite]] = {
    "fib-totkap": (25, _suite_fib_totkap),
    "lucas-totkap": (12, _suite_lucas_totkap),
    "totnu-fib": (10, _suite_totnu_fib),
    "count-bridge": (500, _suite_count_bridge),
    "prop-s": (10000, _suite_prop_s),
    "closed-forms": (30, _suite_closed_forms),
    "oracle-equivalence": (300, _suite_oracle_equivalence),
    "reachability": (2000, _suite_reachability),
    "interval-membership": (15, _suite_interval_membership),
    "squares": (8, _suite_squares),
    "klarner": (18, _suite_klarner),
    "lucas-products": (8, _suite_lucas_products),
}


def run_suite(name: str, bound: Optional[int] = None) -> SuiteReport:
    """Run one suite over 1..bound (suite-specific lower ends); default bound
    is the suite's own."""
    if name not in SUITES:
        known = ", ".join(sorted(SUITES))
        raise UnknownSuiteError(f"unknown suite {name!r}; known suites: {known}")
    if bound is not None and bound < 1:
        raise DomainError(f"suite bound must be >= 1, got {bound}")
    default_bound, runner = SUITES[name]
    effective = default_bound if bound is None else bound
    report = SuiteReport(suite=name, bound=effective)
    start = time.perf_counter()
    runner(effective, report)
    report.elapsed_ms = (time.perf_counter() - start) * 1000.0
    return report


def run_all(bound: Optional[int] = None) -> list[SuiteReport]:
    """Run every suite, in registry order, each at its default (or given) bound."""
    return [run_suite(name, bound) for name in SUITES]
