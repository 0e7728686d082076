"""Exact arithmetic in Z[phi], the ring of integers of Q(sqrt(5)).

Elements are stored as integer pairs a + b*phi with phi = (1 + sqrt(5)) / 2,
so every operation below is exact; no floating point is involved anywhere.
"""

from __future__ import annotations

from functools import total_ordering
from typing import Union

from .errors import DomainError

IntoGolden = Union["GoldenInteger", int]


def golden_sign(a: int, b: int) -> int:
    """Exact sign of a + b*phi using integer arithmetic only.

    2*(a + b*phi) = (2a + b) + b*sqrt(5), and u + v*sqrt(5) with u, v of
    opposite sign takes the sign of the larger of u^2 and 5*v^2 (they are
    never equal for v != 0 because sqrt(5) is irrational).
    """
    u = 2 * a + b
    v = b
    if v == 0:
        return (u > 0) - (u < 0)
    if u == 0:
        return 1 if v > 0 else -1
    if (u > 0) == (v > 0):
        return 1 if u > 0 else -1
    d = u * u - 5 * v * v
    if u > 0:
        return 1 if d > 0 else -1
    return 1 if d < 0 else -1


@total_ordering
class GoldenInteger:
    __slots__ = ("_a", "_b")

    def __init__(self, a: int = 0, b: int = 0) -> None:
        self._a = a
        self._b = b

    @property
    def a(self) -> int:
        return self._a

    @property
    def b(self) -> int:
        return self._b

    @classmethod
    def from_int(cls, n: int) -> "GoldenInteger":
        return cls(n, 0)

    def sign(self) -> int:
        return golden_sign(self._a, self._b)

    def is_integer(self) -> bool:
        return self._b == 0

    def as_int(self) -> int:
        if self._b != 0:
            raise DomainError(f"{self!r} has a nonzero phi coefficient")
        return self._a

    def __eq__(self, other: object) -> bool:
        if isinstance(other, GoldenInteger):
            return self._a == other._a and self._b == other._b
        if isinstance(other, int):
            return self._a == other and self._b == 0
        return NotImplemented

    def __lt__(self, other: IntoGolden) -> bool:
        if isinstance(other, GoldenInteger):
            return golden_sign(self._a - other._a, self._b - other._b) < 0
        if isinstance(other, int):
            return golden_sign(self._a - other, self._b) < 0
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._a, self._b))

    def __add__(self, other: IntoGolden) -> "GoldenInteger":
        if isinstance(other, GoldenInteger):
            return GoldenInteger(self._a + other._a, self._b + other._b)
        if isinstance(other, int):
            return GoldenInteger(self._a + other, self._b)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other: IntoGolden) -> "GoldenInteger":
        if isinstance(other, GoldenInteger):
            return GoldenInteger(self._a - other._a, self._b - other._b)
        if isinstance(other, int):
            return GoldenInteger(self._a - other, self._b)
        return NotImplemented

    def __rsub__(self, other: IntoGolden) -> "GoldenInteger":
        return -self.__sub__(other)

    def __neg__(self) -> "GoldenInteger":
        return GoldenInteger(-self._a, -self._b)

    def __mul__(self, other: IntoGolden) -> "GoldenInteger":
        # (a1 + b1 phi)(a2 + b2 phi) with phi^2 = phi + 1.
        if isinstance(other, GoldenInteger):
            a1, b1, a2, b2 = self._a, self._b, other._a, other._b
            return GoldenInteger(a1 * a2 + b1 * b2, a1 * b2 + a2 * b1 + b1 * b2)
        if isinstance(other, int):
            return GoldenInteger(self._a * other, self._b * other)
        return NotImplemented

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return self._a != 0 or self._b != 0

    def __repr__(self) -> str:
        return f"GoldenInteger({self._a}, {self._b})"

    def __str__(self) -> str:
        return f"{self._a}{self._b:+}phi"


ZERO = GoldenInteger(0, 0)
ONE = GoldenInteger(1, 0)
PHI = GoldenInteger(0, 1)


def compare(x: GoldenInteger, y: GoldenInteger) -> int:
    """Total order on Z[phi]: -1, 0 or 1 as x is below, at or above y."""
    return golden_sign(x.a - y.a, x.b - y.b)


def fibonacci(n: int) -> int:
    """F_n for any integer n, with F_0 = 0, F_1 = 1 and F_{-n} = (-1)^(n+1) F_n.

    No memoization; callers that need a ladder of consecutive values should
    build it themselves.
    """
    m = abs(n)
    a, b = 0, 1
    for _ in range(m):
        a, b = b, a + b
    if n >= 0 or m % 2 == 1:
        return a
    return -a


def lucas(n: int) -> int:
    """L_n for n >= 0, with L_0 = 2, L_1 = 1."""
    if n < 0:
        raise DomainError(f"lucas is defined here for n >= 0, got {n}")
    a, b = 2, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def phi_power(j: int) -> GoldenInteger:
    """phi**j for any integer j, via phi^j = F_{j-1} + F_j * phi."""
    return GoldenInteger(fibonacci(j - 1), fibonacci(j))
