"""Counting base-phi and Fibonacci representations by block recursion.

Writing an expansion's digit string as 1 0^{s_n} 1 ... 1 0^{s_1} 1, the number
of expansions reachable by golden-mean flips satisfies a three-term recursion
over the gaps, processed from the tail upward:

  r_0 = 1
  r_k = (s_k/2 + 1) * r_{k-1}                    s_k even
  r_k = ((s_k+1)/2 + 1) * r_{k-1} - r_{k-2}      s_k odd   (k >= 2)

with an initial r_1 that depends on what happens at the tail. Tail-extension
by two fractional digits is allowed exactly when s_1 is odd, which adds one
extra representation in that case:

  knott mode:    r_1 = s_1/2 + 1 (even)   (s_1+1)/2 + 1 (odd)
  natural mode:  r_1 = s_1/2 + 1 (even)   (s_1+1)/2     (odd)

The natural mode is simultaneously the recursion for the number of ways to
write an integer as a sum of distinct Fibonacci numbers, applied to the gap
sequence of the Zeckendorf word, where the terminal block is the run of
zeros after the lowest 1 down to Fibonacci index 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .bergman import bergman_greedy
from .errors import DomainError, GuardBoundError, MalformedWordError
from .goldenring import fibonacci
from .words import BlockFactorization, block_factorization

MODE_KNOTT = "knott"
MODE_NATURAL = "natural"

FIB_ORACLE_CAP = 10**6


@dataclass(frozen=True)
class RecursionTrace:
    """The intermediate values r_0 ... r_n of one block recursion run."""

    mode: str
    r: tuple[int, ...]

    @property
    def result(self) -> int:
        return self.r[-1]


def recursion_trace(blocks: BlockFactorization, mode: str) -> RecursionTrace:
    if mode not in (MODE_KNOTT, MODE_NATURAL):
        raise DomainError(f"unknown counting mode {mode!r}")
    gaps = blocks.gaps
    values = [1]
    if gaps:
        s1 = gaps[-1]
        if s1 % 2 == 0:
            values.append(s1 // 2 + 1)
        else:
            values.append((s1 + 1) // 2 + (1 if mode == MODE_KNOTT else 0))
        for k in range(2, len(gaps) + 1):
            sk = gaps[len(gaps) - k]
            if sk % 2 == 0:
                values.append((sk // 2 + 1) * values[-1])
            else:
                values.append(((sk + 1) // 2 + 1) * values[-1] - values[-2])
    return RecursionTrace(mode, tuple(values))


def count_word(blocks: BlockFactorization, mode: str) -> int:
    """Number of representations for a word with the given gap sequence."""
    return recursion_trace(blocks, mode).result


def tot_kappa(n: int) -> int:
    """Number of expansions of n with tail condition (011 never at the tail)."""
    if n < 0:
        raise DomainError(f"tot_kappa needs n >= 0, got {n}")
    if n == 0:
        return 1
    return count_word(block_factorization(bergman_greedy(n)), MODE_KNOTT)


def tot_nu(n: int) -> int:
    """Number of expansions of n whose lowest digit stays at the Bergman R."""
    if n < 0:
        raise DomainError(f"tot_nu needs n >= 0, got {n}")
    if n == 0:
        return 1
    return count_word(block_factorization(bergman_greedy(n)), MODE_NATURAL)


@dataclass(frozen=True)
class FibonacciWord:
    """Binary digits e_m ... e_2 over Fibonacci indices, lowest index 2."""

    digits: tuple[int, ...]

    @property
    def highest_index(self) -> int:
        return len(self.digits) + 1

    def indices(self) -> tuple[int, ...]:
        """Fibonacci indices carrying digit 1, descending."""
        m = self.highest_index
        return tuple(m - i for i, d in enumerate(self.digits) if d)

    def value(self) -> int:
        return sum(fibonacci(i) for i in self.indices())

    def is_zeckendorf(self) -> bool:
        return all(
            not (a and b) for a, b in zip(self.digits, self.digits[1:])
        )

    def __str__(self) -> str:
        return "".join(str(d) for d in self.digits) if self.digits else "0"

    def __iter__(self) -> Iterator[int]:
        return iter(self.digits)


def zeckendorf(m: int) -> FibonacciWord:
    """Greedy Zeckendorf word of m >= 0 (m = 0 gives the empty word)."""
    if m < 0:
        raise DomainError(f"zeckendorf needs m >= 0, got {m}")
    if m == 0:
        return FibonacciWord(())
    fibs = [1, 2]  # F_2, F_3
    while fibs[-1] + fibs[-2] <= m:
        fibs.append(fibs[-1] + fibs[-2])
    digits = []
    rem = m
    for f in reversed(fibs):
        if f <= rem:
            digits.append(1)
            rem -= f
        elif digits:
            digits.append(0)
    if rem != 0:
        raise DomainError(f"greedy Zeckendorf failed for {m}")
    return FibonacciWord(tuple(digits))


def fibonacci_blocks(word: FibonacciWord) -> BlockFactorization:
    """Gap sequence of a Fibonacci word for the counting recursion.

    Each gap is the zero run after a 1; the terminal gap runs down to index 2,
    so a word ending in zeros contributes them to s_1 (equivalently, factorize
    the word with a sentinel 1 appended below its lowest index).
    """
    idx = word.indices()
    if not idx:
        raise MalformedWordError("cannot factorize the empty Fibonacci word")
    gaps = [a - b - 1 for a, b in zip(idx, idx[1:])]
    gaps.append(idx[-1] - 2)
    return BlockFactorization(tuple(gaps))


def tot_fib(m: int) -> int:
    """Number of ways to write m as a sum of distinct Fibonacci numbers."""
    if m < 0:
        raise DomainError(f"tot_fib needs m >= 0, got {m}")
    if m == 0:
        return 1
    return count_word(fibonacci_blocks(zeckendorf(m)), MODE_NATURAL)


def fib_representation_counts(limit: int) -> list[int]:
    """DP oracle: counts[v] = subsets of {F_2, F_3, ...} summing to v <= limit."""
    if limit < 0:
        raise DomainError(f"fib_representation_counts needs limit >= 0, got {limit}")
    if limit > FIB_ORACLE_CAP:
        raise GuardBoundError(f"oracle limit {limit} exceeds cap {FIB_ORACLE_CAP}")
    counts = [0] * (limit + 1)
    counts[0] = 1
    f, g = 1, 2  # F_2, F_3
    while f <= limit:
        for v in range(limit, f - 1, -1):
            counts[v] += counts[v - f]
        f, g = g, f + g
    return counts


def tot_fib_oracle(m: int) -> int:
    """Independent subset-sum count of tot_fib(m); refuses m above the cap."""
    if m < 0:
        raise DomainError(f"tot_fib_oracle needs m >= 0, got {m}")
    return fib_representation_counts(m)[m]


def totnu_via_fib(n: int) -> int:
    """tot_nu(n) computed through the Fibonacci side: tot_fib(F_{-R+2} * n).

    Defined for n > 3; multiplying n by F_{-R(n)+2} turns the Bergman digits
    into the Zeckendorf word of the product.
    """
    if n <= 3:
        raise DomainError(f"totnu_via_fib needs n > 3, got {n}")
    beta = bergman_greedy(n)
    return tot_fib(fibonacci(-beta.R + 2) * n)
