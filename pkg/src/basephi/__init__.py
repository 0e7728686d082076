"""Exact base-phi numeration: Bergman expansions, flip enumeration, counting.

Natural numbers have a unique expansion N = sum(d_i * phi^i) with binary
digits and no two adjacent ones (the Bergman expansion). This package
constructs it exactly over Z[phi], enumerates all Knott and natural
representations by golden-mean-flip rewriting, counts them with block
recursions (TotKap, TotNu, TotFIB), and checks the closed-form identities
relating these quantities with a suite-based verification harness.
"""

from .bergman import (
    LucasIntervalInfo,
    Subinterval,
    bergman_fibonacci,
    bergman_greedy,
    bergman_lucas,
    bergman_recursive,
    classify_lucas_interval,
)
from .counting import (
    FIB_ORACLE_CAP,
    MODE_KNOTT,
    MODE_NATURAL,
    FibonacciWord,
    RecursionTrace,
    count_word,
    fib_representation_counts,
    fibonacci_blocks,
    recursion_trace,
    tot_fib,
    tot_fib_oracle,
    tot_kappa,
    tot_nu,
    totnu_via_fib,
    zeckendorf,
)
from .enumeration import (
    BRUTE_FORCE_WINDOW_CAP,
    ExpansionSet,
    brute_force_expansions,
    enumerate_knott,
    enumerate_natural,
    flip_closure,
)
from .errors import (
    BasePhiError,
    DomainError,
    GuardBoundError,
    InternalRewriteError,
    MalformedWordError,
    PatternMismatchError,
    UnknownSuiteError,
)
from .goldenring import (
    ONE,
    PHI,
    ZERO,
    GoldenInteger,
    compare,
    fibonacci,
    golden_sign,
    lucas,
    phi_power,
)
from .verify import SUITES, Failure, SuiteReport, run_all, run_suite
from .words import (
    REWRITE_STEP_CAP,
    BlockFactorization,
    DigitWord,
    block_factorization,
    flip,
    normalize_to_bergman,
    reduce_to_bergman,
    satisfies_knott,
    unflip,
)

__version__ = "0.1.0"

__all__ = [
    "BasePhiError",
    "BlockFactorization",
    "BRUTE_FORCE_WINDOW_CAP",
    "DigitWord",
    "DomainError",
    "ExpansionSet",
    "FIB_ORACLE_CAP",
    "Failure",
    "FibonacciWord",
    "GoldenInteger",
    "GuardBoundError",
    "InternalRewriteError",
    "LucasIntervalInfo",
    "MalformedWordError",
    "MODE_KNOTT",
    "MODE_NATURAL",
    "ONE",
    "PatternMismatchError",
    "PHI",
    "RecursionTrace",
    "REWRITE_STEP_CAP",
    "SUITES",
    "Subinterval",
    "SuiteReport",
    "UnknownSuiteError",
    "ZERO",
    "bergman_fibonacci",
    "bergman_greedy",
    "bergman_lucas",
    "bergman_recursive",
    "block_factorization",
    "brute_force_expansions",
    "classify_lucas_interval",
    "compare",
    "count_word",
    "enumerate_knott",
    "enumerate_natural",
    "fib_representation_counts",
    "fibonacci",
    "fibonacci_blocks",
    "flip",
    "flip_closure",
    "golden_sign",
    "lucas",
    "normalize_to_bergman",
    "phi_power",
    "recursion_trace",
    "reduce_to_bergman",
    "run_all",
    "run_suite",
    "satisfies_knott",
    "tot_fib",
    "tot_fib_oracle",
    "tot_kappa",
    "tot_nu",
    "totnu_via_fib",
    "unflip",
    "zeckendorf",
]
