"""Enumeration of base-phi expansions by golden-mean flips.

The flip closure of a word is everything reachable by repeatedly rewriting
100 -> 011 anywhere above a fixed floor position. Starting from the Bergman
expansion with the floor two below its lowest digit, the closure followed by
the tail condition (digits at R+2, R+1, R never 011) yields exactly the
expansions of N; restricting further to words whose lowest one sits at the
Bergman R gives the natural expansions.

A windowed backtracking search over all binary words doubles as an
independent oracle; it refuses windows wider than 64 positions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .bergman import bergman_greedy
from .errors import DomainError, GuardBoundError, MalformedWordError
from .goldenring import fibonacci, golden_sign
from .words import DigitWord

BRUTE_FORCE_WINDOW_CAP = 64


@dataclass(frozen=True)
class ExpansionSet:
    """A deduplicated set of canonical words, sorted by (R, digit string).

    target is the common integer value of the members when they have one
    (expansion sets of a natural number); raw closures of words with an
    irrational value carry target=None.
    """

    target: Optional[int]
    mode: str  # "knott", "natural" or "raw-closure"
    members: tuple[DigitWord, ...]

    @staticmethod
    def build(target: Optional[int], mode: str, words) -> "ExpansionSet":
        ordered = sorted(set(words), key=lambda w: (w.R, w.digit_string))
        return ExpansionSet(target, mode, tuple(ordered))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[DigitWord]:
        return iter(self.members)

    def __contains__(self, word: object) -> bool:
        return word in self.members


def flip_closure(word: DigitWord, floor: int) -> ExpansionSet:
    """All words reachable from `word` by flips whose windows stay >= floor.

    Every member shares the frame [floor, L], so the search runs on plain
    bitmasks (bit i of a mask is the digit at position floor + i) and a flip
    at bit i is one xor; words are materialized only at the end.
    """
    if not word.is_binary():
        raise MalformedWordError(f"flip_closure requires a binary word, got {word}")
    w = word.canonical()
    if floor > w.R:
        raise DomainError(f"floor {floor} is above the lowest digit of {w}")
    mask0 = int(w.digit_string, 2) << (w.R - floor) if not w.is_zero() else 0
    value = w.evaluate()
    target = value.as_int() if value.is_integer() and value.a >= 0 else None
    return ExpansionSet.build(
        target, "raw-closure", [_word_from_mask(m, floor) for m in _closure_masks(mask0)]
    )


def _closure_masks(mask0: int) -> set[int]:
    seen = {mask0}
    stack = [mask0]
    while stack:
        mask = stack.pop()
        # Bits 0 and 1 cannot head a window: it would reach below the floor.
        bits = mask & -4
        while bits:
            low = bits & -bits
            bits ^= low
            i = low.bit_length() - 1
            if (mask >> (i - 2)) & 0b111 == 0b100:
                child = mask ^ (0b111 << (i - 2))
                if child not in seen:
                    seen.add(child)
                    stack.append(child)
    return seen


def _word_from_mask(mask: int, floor: int) -> DigitWord:
    if not mask:
        return DigitWord.zero()
    trailing = (mask & -mask).bit_length() - 1
    return DigitWord(tuple(map(int, format(mask >> trailing, "b"))), floor + trailing)


def enumerate_knott(n: int) -> ExpansionSet:
    """All expansions of n >= 1 whose tail is not 011 at (R+2, R+1, R).

    The tail condition is applied to the closure masks before any word is
    materialized: with b the lowest set bit, (mask >> b) & 0b111 == 0b011
    reads exactly 011 at (R+2, R+1, R).
    """
    if n < 1:
        raise DomainError(f"enumerate_knott needs n >= 1, got {n}")
    beta = bergman_greedy(n)
    floor = beta.R - 2
    mask0 = int(beta.digit_string, 2) << 2
    members = [
        _word_from_mask(m, floor)
        for m in _closure_masks(mask0)
        if (m >> ((m & -m).bit_length() - 1)) & 0b111 != 0b011
    ]
    return ExpansionSet.build(n, "knott", members)


def enumerate_natural(n: int) -> ExpansionSet:
    """The expansions of n whose lowest one sits at the Bergman exponent R(n)."""
    if n < 1:
        raise DomainError(f"enumerate_natural needs n >= 1, got {n}")
    beta = bergman_greedy(n)
    knott = enumerate_knott(n)
    return ExpansionSet.build(n, "natural", (w for w in knott if w.R == beta.R))


def brute_force_expansions(n: int, window: tuple[int, int]) -> ExpansionSet:
    """Every binary word supported on [lo, hi] that evaluates to n.

    Backtracking over positions from hi down to lo, pruning a branch as soon
    as the remainder is negative or exceeds the value of the all-ones tail.
    Windows wider than BRUTE_FORCE_WINDOW_CAP positions are refused.
    """
    hi, lo = window
    if n < 0:
        raise DomainError(f"brute_force_expansions needs n >= 0, got {n}")
    if lo > hi:
        raise DomainError(f"empty window {window}")
    if hi - lo > BRUTE_FORCE_WINDOW_CAP:
        raise GuardBoundError(
            f"window {window} spans {hi - lo + 1} positions, cap is {BRUTE_FORCE_WINDOW_CAP + 1}"
        )
    # ladder[i] = phi^(lo + i), suffix[i] = phi^lo + ... + phi^(lo + i).
    ladder = []
    a, b = _phi_pair(lo)
    nxt = _phi_pair(lo + 1)
    for _ in range(hi - lo + 1):
        ladder.append((a, b))
        (a, b), nxt = nxt, (a + nxt[0], b + nxt[1])
    suffix = []
    sa = sb = 0
    for pa, pb in ladder:
        sa += pa
        sb += pb
        suffix.append((sa, sb))
    found: list[tuple[int, ...]] = []
    chosen: list[int] = []

    def search(i: int, rem_a: int, rem_b: int) -> None:
        if rem_a == 0 and rem_b == 0:
            found.append(tuple(chosen))
            return
        if i < 0:
            return
        sa, sb = suffix[i]
        if golden_sign(sa - rem_a, sb - rem_b) < 0:
            return
        pa, pb = ladder[i]
        if golden_sign(rem_a - pa, rem_b - pb) >= 0:
            chosen.append(lo + i)
            search(i - 1, rem_a - pa, rem_b - pb)
            chosen.pop()
        search(i - 1, rem_a, rem_b)

    search(hi - lo, n, 0)
    return ExpansionSet.build(n, "raw-closure", (DigitWord.from_positions(p) for p in found))


def _phi_pair(j: int) -> tuple[int, int]:
    return fibonacci(j - 1), fibonacci(j)
