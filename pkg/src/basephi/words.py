"""Digit words over powers of phi and the golden-mean rewriting moves on them.

A word stores digits most-significant-first together with the exponent range
[R, L] it covers; position p carries weight phi**p. Positions outside the
stored range read as digit 0. The canonical form has a nonzero first and last
digit (the zero word is the single digit 0 at position 0).

The two rewriting moves both preserve the evaluated value:

  flip at p:    window (p, p-1, p-2) rewrites 100 -> 011
  unflip at p:  window (p, p-1, p-2) rewrites 011 -> 100

using phi^p = phi^(p-1) + phi^(p-2). A flip may extend the word below R by up
to two positions; an unflip may extend it above L by one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import InternalRewriteError, MalformedWordError, PatternMismatchError
from .goldenring import GoldenInteger, fibonacci

REWRITE_STEP_CAP = 10**6


class DigitWord:
    __slots__ = ("_digits", "_low")

    def __init__(self, digits: Iterable[int], low: int = 0) -> None:
        ds = tuple(digits)
        if not ds:
            raise MalformedWordError("a word needs at least one digit")
        if any(not isinstance(d, int) or d < 0 for d in ds):
            raise MalformedWordError(f"digits must be non-negative integers: {ds}")
        self._digits = ds
        self._low = low

    @classmethod
    def zero(cls) -> "DigitWord":
        return cls((0,), 0)

    @classmethod
    def from_positions(cls, positions: Iterable[int]) -> "DigitWord":
        """Canonical binary word with digit 1 exactly at the given positions."""
        pos = set(positions)
        if not pos:
            return cls.zero()
        hi, lo = max(pos), min(pos)
        return cls(tuple(1 if p in pos else 0 for p in range(hi, lo - 1, -1)), lo)

    @classmethod
    def from_string(cls, text: str) -> "DigitWord":
        """Parse a rendered word such as '101.01' or '1100'; canonicalizes."""
        s = text.strip()
        if s.count(".") > 1 or not s:
            raise MalformedWordError(f"cannot parse word {text!r}")
        int_part, _, frac_part = s.partition(".")
        if not int_part or not all(c.isdigit() for c in int_part + frac_part):
            raise MalformedWordError(f"cannot parse word {text!r}")
        digits = tuple(int(c) for c in int_part + frac_part)
        return cls(digits, -len(frac_part)).canonical()

    @property
    def digits(self) -> tuple[int, ...]:
        return self._digits

    @property
    def R(self) -> int:
        return self._low

    @property
    def L(self) -> int:
        return self._low + len(self._digits) - 1

    @property
    def digit_string(self) -> str:
        return "".join(str(d) for d in self._digits)

    def digit(self, p: int) -> int:
        if self._low <= p <= self.L:
            return self._digits[self.L - p]
        return 0

    def is_zero(self) -> bool:
        return all(d == 0 for d in self._digits)

    def is_binary(self) -> bool:
        return all(d <= 1 for d in self._digits)

    def is_canonical(self) -> bool:
        if self.is_zero():
            return self._digits == (0,) and self._low == 0
        return self._digits[0] != 0 and self._digits[-1] != 0

    def has_adjacent_ones(self) -> bool:
        ds = self._digits
        return any(ds[i] >= 1 and ds[i + 1] >= 1 for i in range(len(ds) - 1))

    def one_positions(self) -> tuple[int, ...]:
        """Positions carrying digit 1, descending; requires a binary word."""
        if not self.is_binary():
            raise MalformedWordError(f"{self} is not binary")
        top = self.L
        return tuple(top - i for i, d in enumerate(self._digits) if d == 1)

    def canonical(self) -> "DigitWord":
        ds = self._digits
        first = next((i for i, d in enumerate(ds) if d != 0), None)
        if first is None:
            return DigitWord.zero()
        last = max(i for i, d in enumerate(ds) if d != 0)
        return DigitWord(ds[first : last + 1], self.L - last)

    def evaluate(self) -> GoldenInteger:
        """Exact value sum(d_p * phi^p), walking one phi-power ladder."""
        top = self.L
        # (fa, fb) = phi^p as an integer pair, stepped down via
        # phi^(p-1) = phi^(p+1) - phi^p.
        fa, fb = fibonacci(top - 1), fibonacci(top)
        na, nb = fibonacci(top), fibonacci(top + 1)
        va, vb = 0, 0
        for d in self._digits:
            if d:
                va += d * fa
                vb += d * fb
            fa, fb, na, nb = na - fa, nb - fb, fa, fb
        return GoldenInteger(va, vb)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, DigitWord):
            return self._digits == other._digits and self._low == other._low
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._digits, self._low))

    def __len__(self) -> int:
        return len(self._digits)

    def __repr__(self) -> str:
        return f"DigitWord({self._digits!r}, low={self._low})"

    def __str__(self) -> str:
        """Render with a radix point exactly when R < 0; zero-pad to position 0."""
        if self.is_zero():
            return "0"
        s = self.digit_string
        if self._low > 0:
            return s + "0" * self._low
        if self._low == 0:
            return s
        if self.L < 0:
            return "0." + "0" * (-1 - self.L) + s
        split = self.L + 1
        return s[:split] + "." + s[split:]


def flip(word: DigitWord, p: int) -> DigitWord:
    """Rewrite the window (p, p-1, p-2) from 100 to 011; value-preserving.

    The two lower window positions may lie below R (they read as 0 there), so
    a flip can extend the word downward by up to two positions.
    """
    if not word.is_binary():
        raise MalformedWordError(f"flip requires a binary word, got {word}")
    w = word.canonical()
    window = (w.digit(p), w.digit(p - 1), w.digit(p - 2))
    if window != (1, 0, 0):
        raise PatternMismatchError(
            f"flip at {p} needs window 100, found {''.join(map(str, window))} in {w}"
        )
    pos = set(w.one_positions())
    pos.remove(p)
    pos.update((p - 1, p - 2))
    return DigitWord.from_positions(pos)


def unflip(word: DigitWord, p: int) -> DigitWord:
    """Rewrite the window (p, p-1, p-2) from 011 to 100; inverse of flip.

    p may be L+1 (the implicit leading zero), extending the word upward by one.
    """
    if not word.is_binary():
        raise MalformedWordError(f"unflip requires a binary word, got {word}")
    w = word.canonical()
    window = (w.digit(p), w.digit(p - 1), w.digit(p - 2))
    if window != (0, 1, 1):
        raise PatternMismatchError(
            f"unflip at {p} needs window 011, found {''.join(map(str, window))} in {w}"
        )
    pos = set(w.one_positions())
    pos.difference_update((p - 1, p - 2))
    pos.add(p)
    return DigitWord.from_positions(pos)


def satisfies_knott(word: DigitWord) -> bool:
    """Digits at (R+2, R+1, R) must not read 011; expects a canonical word.

    The zero word and short tails are judged on their literal digits, with
    positions above L reading as 0.
    """
    r = word.R
    return (word.digit(r + 2), word.digit(r + 1), word.digit(r)) != (0, 1, 1)


def reduce_to_bergman(word: DigitWord) -> DigitWord:
    """Unflip at the leftmost adjacent 11 until none remains.

    Maps any binary word to the unique equal-valued word with no two adjacent
    ones; on expansions of a natural number that is its Bergman expansion.

    The unflip loop runs on an integer bitmask (bit i holds the digit at
    position low+i): the leftmost 11 has a 0 above it, so the rewrite is a
    single three-bit xor, and the word only ever grows upward.
    """
    if not word.is_binary():
        raise MalformedWordError(f"reduce_to_bergman requires a binary word, got {word}")
    w = word.canonical()
    if w.is_zero():
        return w
    low = w.R
    mask = int(w.digit_string, 2)
    for _ in range(REWRITE_STEP_CAP):
        pairs = mask & (mask >> 1)
        if not pairs:
            trailing = (mask & -mask).bit_length() - 1
            mask >>= trailing
            return DigitWord(
                tuple(int(c) for c in format(mask, "b")), low + trailing
            )
        mask ^= 0b111 << (pairs.bit_length() - 1)
    raise InternalRewriteError(f"reduce_to_bergman exceeded {REWRITE_STEP_CAP} steps")


def normalize_to_bergman(word: DigitWord) -> DigitWord:
    """Normalize a word with arbitrary non-negative digits to Bergman form.

    Digits >= 2 are cleared lowest-position-first via
    2*phi^i = phi^(i+1) + phi^(i-2), then adjacent ones are removed with
    reduce_to_bergman. Clearing carries upward and spills at most one unit
    below the lowest oversized digit, and reduction never creates a digit
    above 1, so one clear-and-reduce pass reaches the fixed point.
    """
    digits = {p: word.digit(p) for p in range(word.R, word.L + 1) if word.digit(p)}
    for _ in range(REWRITE_STEP_CAP):
        over = [p for p, d in digits.items() if d >= 2]
        if not over:
            break
        i = min(over)
        digits[i] -= 2
        digits[i + 1] = digits.get(i + 1, 0) + 1
        digits[i - 2] = digits.get(i - 2, 0) + 1
    else:
        raise InternalRewriteError(
            f"normalize_to_bergman exceeded {REWRITE_STEP_CAP} clearing steps"
        )
    live = {p for p, d in digits.items() if d}
    if not live:
        return DigitWord.zero()
    hi, lo = max(live), min(live)
    cleared = DigitWord(tuple(digits.get(p, 0) for p in range(hi, lo - 1, -1)), lo)
    return reduce_to_bergman(cleared)


@dataclass(frozen=True)
class BlockFactorization:
    """Zero-run gaps (s_n, ..., s_1) of a word 1 0^{s_n} 1 ... 1 0^{s_1} 1.

    gaps[0] is the run after the leading 1; gaps[-1] (called s_1) is the run
    just before the final 1. A single 1 factorizes to the empty tuple.
    """

    gaps: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.gaps)

    def reconstruct(self) -> str:
        return "1" + "".join("0" * g + "1" for g in self.gaps)

    def __iter__(self) -> Iterator[int]:
        return iter(self.gaps)


def block_factorization(word: DigitWord) -> BlockFactorization:
    """Gap sequence of a canonical nonzero binary word (radix point ignored)."""
    if not word.is_binary():
        raise MalformedWordError(f"block factorization requires a binary word, got {word}")
    if word.is_zero():
        raise MalformedWordError("block factorization requires a nonzero word")
    ds = word.digits
    if ds[0] != 1 or ds[-1] != 1:
        raise MalformedWordError(
            f"block factorization requires a word starting and ending in 1, got {word}"
        )
    ones = [i for i, d in enumerate(ds) if d == 1]
    gaps = tuple(b - a - 1 for a, b in zip(ones, ones[1:]))
    return BlockFactorization(gaps)
