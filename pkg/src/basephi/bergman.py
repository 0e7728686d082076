"""Constructors for the Bergman expansion beta(N) and the Lucas interval map.

beta(N) is the unique binary expansion of a natural number N in powers of phi
with no two adjacent ones. Two independent constructors are provided: a greedy
algorithm driven by exact comparisons, and a recursive one that assembles the
word from the expansion of a smaller number using the interval structure of
the Lucas numbers. Their agreement is a standing cross-check.

The natural numbers >= 2 split into intervals
  Lambda_{2n}   = [L_{2n}, L_{2n+1}]          (even)
  Lambda_{2n+1} = [L_{2n+1} + 1, L_{2n+2} - 1] (odd)
and each odd interval further splits into consecutive pieces I_n, J_n, K_n.
Membership determines both the lowest exponent R(N) and which digit surgery
rebuilds beta(N) from a shorter expansion.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .errors import DomainError, InternalRewriteError
from .goldenring import golden_sign, lucas
from .words import DigitWord

_BASE_EXPANSIONS = {
    0: "0",
    1: "1",
    2: "10.01",
    3: "100.01",
    4: "101.01",
    5: "1000.1001",
    6: "1010.0001",
}


def bergman_greedy(n: int) -> DigitWord:
    """Greedy Bergman expansion: repeatedly subtract the largest phi power.

    All comparisons run on exact integer pairs; the no-adjacent-ones property
    of the result is asserted after construction.
    """
    if n < 0:
        raise DomainError(f"bergman_greedy needs n >= 0, got {n}")
    if n == 0:
        return DigitWord.zero()
    # Ascend the phi-power ladder to the largest k with phi^k <= n.
    cur_a, cur_b = 1, 0  # phi^0
    nxt_a, nxt_b = 0, 1  # phi^1
    k = 0
    while golden_sign(n - nxt_a, -nxt_b) >= 0:
        cur_a, cur_b, nxt_a, nxt_b = nxt_a, nxt_b, cur_a + nxt_a, cur_b + nxt_b
        k += 1
    k_max = k
    rem_a, rem_b = n, 0
    positions = []
    while rem_a or rem_b:
        if k < -(k_max + 8):
            raise InternalRewriteError(f"greedy expansion of {n} failed to terminate")
        if golden_sign(rem_a - cur_a, rem_b - cur_b) >= 0:
            positions.append(k)
            rem_a -= cur_a
            rem_b -= cur_b
        # Step the ladder down: phi^(k-1) = phi^(k+1) - phi^k.
        cur_a, cur_b, nxt_a, nxt_b = nxt_a - cur_a, nxt_b - cur_b, cur_a, cur_b
        k -= 1
    if any(p - q == 1 for p, q in zip(positions, positions[1:])):
        raise InternalRewriteError(f"greedy expansion of {n} produced adjacent ones")
    return DigitWord.from_positions(positions)


@dataclass(frozen=True)
class Subinterval:
    kind: str  # "I", "J" or "K"
    bounds: tuple[int, int]


@dataclass(frozen=True)
class LucasIntervalInfo:
    """Which Lucas interval Lambda_{2n} or Lambda_{2n+1} contains N."""

    n: int
    parity: str  # "even" or "odd"
    bounds: tuple[int, int]
    subinterval: Optional[Subinterval]

    @property
    def index(self) -> int:
        """The m of Lambda_m."""
        return 2 * self.n + (self.parity == "odd")


def classify_lucas_interval(n: int) -> LucasIntervalInfo:
    """Locate n >= 2 in the Lucas interval partition.

    Odd intervals report the containing subinterval
      I = [L_{2k+1}+1, L_{2k+1}+L_{2k-2}-1]
      J = [L_{2k+1}+L_{2k-2}, L_{2k+1}+L_{2k-1}]
      K = [L_{2k+1}+L_{2k-1}+1, L_{2k+2}-1]
    for k >= 1 (J is empty for k = 1). Lambda_1 = [2, 2] has no subinterval
    decomposition, so its info carries subinterval=None.
    """
    if n < 2:
        raise DomainError(f"classification needs n >= 2, got {n}")
    seq = [2, 1]  # L_0, L_1
    while seq[-1] <= n + 1:
        seq.append(seq[-1] + seq[-2])
    m = 0
    while True:
        if m + 2 >= len(seq):
            seq.append(seq[-1] + seq[-2])
        if m % 2 == 0:
            lo, hi = seq[m], seq[m + 1]
        else:
            lo, hi = seq[m] + 1, seq[m + 1] - 1
        if lo <= n <= hi:
            break
        m += 1
    k = m // 2
    if m % 2 == 0:
        return LucasIntervalInfo(k, "even", (lo, hi), None)
    sub = None
    if k >= 1:
        base = seq[2 * k + 1]
        pieces = (
            ("I", (base + 1, base + seq[2 * k - 2] - 1)),
            ("J", (base + seq[2 * k - 2], base + seq[2 * k - 1])),
            ("K", (base + seq[2 * k - 1] + 1, seq[2 * k + 2] - 1)),
        )
        for kind, (p_lo, p_hi) in pieces:
            if p_lo <= n <= p_hi:
                sub = Subinterval(kind, (p_lo, p_hi))
                break
    return LucasIntervalInfo(k, "odd", (lo, hi), sub)


def _embed(prefix: str, inner: DigitWord, suffix: str, new_low: int) -> DigitWord:
    """Replace the inner word's leading '10' and trailing '01' by new ends."""
    s = inner.digit_string
    if not s.startswith("10") or not s.endswith("01"):
        raise InternalRewriteError(f"surgery expects a 10...01 word, got {inner}")
    body = prefix + s[2:-2] + suffix
    word = DigitWord(tuple(int(c) for c in body), new_low)
    if word.has_adjacent_ones() or not word.is_canonical():
        raise InternalRewriteError(f"surgery produced a malformed word {word}")
    return word


@lru_cache(maxsize=None)
def bergman_recursive(n: int) -> DigitWord:
    """Bergman expansion assembled from the expansion of a smaller number.

    Even interval members overlay beta(k) inside the frame of beta(L_{2m});
    odd interval members splice an inner expansion between fixed end blocks,
    one form per subinterval. Recursion depth is O(log n).
    """
    if n < 0:
        raise DomainError(f"bergman_recursive needs n >= 0, got {n}")
    if n <= 6:
        return DigitWord.from_string(_BASE_EXPANSIONS[n])
    info = classify_lucas_interval(n)
    m = info.n
    if info.parity == "even":
        k = n - lucas(2 * m)
        inner = bergman_recursive(k)
        frame = {2 * m, -2 * m}
        if inner.is_zero():
            return DigitWord.from_positions(frame)
        ones = set(inner.one_positions())
        if max(ones) > 2 * m - 2 or min(ones) < -(2 * m - 2):
            raise InternalRewriteError(f"overlay of beta({k}) collides with the frame")
        return DigitWord.from_positions(frame | ones)
    if info.subinterval is None:
        raise InternalRewriteError(f"no subinterval decomposition for {n}")
    new_low = -(2 * m + 2)
    kind = info.subinterval.kind
    if kind == "I":
        k = n - lucas(2 * m + 1)
        inner = bergman_recursive(lucas(2 * m - 1) + k)
        return _embed("1000", inner, "1001", new_low)
    if kind == "K":
        k = n - lucas(2 * m + 1) - lucas(2 * m - 1)
        inner = bergman_recursive(lucas(2 * m - 1) + k)
        return _embed("1010", inner, "0001", new_low)
    k = n - lucas(2 * m + 1) - lucas(2 * m - 2)
    inner = bergman_recursive(lucas(2 * m - 2) + k)
    return _embed("10010", inner, "001001", new_low)


def bergman_fibonacci(n: int) -> DigitWord:
    """Closed form of beta(F_n) for n >= 3; leading exponent n - 2."""
    if n < 3:
        raise DomainError(f"bergman_fibonacci needs n >= 3, got {n}")
    if n % 2 == 1:
        s = "1000" * ((n - 3) // 2) + "1001"
    else:
        s = "1000" * ((n - 4) // 2) + "10001"
    return DigitWord(tuple(int(c) for c in s), (n - 2) - len(s) + 1)


def bergman_lucas(n: int) -> DigitWord:
    """Closed form of beta(L_n) for n >= 2.

    Even n = 2m: ones at positions 2m and -2m only. Odd n = 2m+1: ones at
    every even position from 2m down to -2m.
    """
    if n < 2:
        raise DomainError(f"bergman_lucas needs n >= 2, got {n}")
    m, r = divmod(n, 2)
    if r == 0:
        return DigitWord.from_positions({2 * m, -2 * m})
    return DigitWord.from_positions(range(-2 * m, 2 * m + 1, 2))
