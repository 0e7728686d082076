"""Flip-closure enumeration against examples and the brute-force oracle."""

import pytest

from basephi.bergman import bergman_greedy
from basephi.counting import tot_kappa, tot_nu
from basephi.enumeration import (
    BRUTE_FORCE_WINDOW_CAP,
    brute_force_expansions,
    enumerate_knott,
    enumerate_natural,
    flip_closure,
)
from basephi.errors import DomainError, GuardBoundError, MalformedWordError
from basephi.goldenring import GoldenInteger
from basephi.words import DigitWord, satisfies_knott


def words(expansion_set) -> set[str]:
    return {str(w) for w in expansion_set}


def test_flip_closure_of_phi4():
    closure = flip_closure(DigitWord.from_positions([4]), 0)
    assert words(closure) == {"10000", "1100", "1011"}
    assert closure.target is None  # phi^4 is irrational
    assert closure.mode == "raw-closure"


def test_flip_closure_of_phi5():
    closure = flip_closure(DigitWord.from_positions([5]), 0)
    assert words(closure) == {"100000", "11000", "10110"}


def test_flip_closure_respects_floor():
    # With the floor raised to 3, phi^4 admits only the identity rewrite path.
    closure = flip_closure(DigitWord.from_positions([4]), 3)
    assert words(closure) == {"10000"}
    with pytest.raises(DomainError):
        flip_closure(DigitWord.from_positions([4]), 5)
    with pytest.raises(MalformedWordError):
        flip_closure(DigitWord((2,), 0), 0)


def test_flip_closure_members_share_value():
    for n in (1, 4, 12, 50):
        beta = bergman_greedy(n)
        closure = flip_closure(beta, beta.R - 2)
        assert closure.target == n
        for w in closure:
            assert w.evaluate() == GoldenInteger(n, 0)
            assert w.R >= beta.R - 2


def test_enumerate_knott_examples():
    assert words(enumerate_knott(1)) == {"1"}
    assert words(enumerate_knott(2)) == {"10.01", "1.11"}
    assert words(enumerate_knott(4)) == {"101.01", "100.1111", "11.1111"}


def test_enumerate_natural_examples():
    assert words(enumerate_natural(3)) == {"100.01", "11.01"}
    assert words(enumerate_natural(4)) == {"101.01"}


def test_enumerate_rejects_non_positive():
    for bad in (0, -3):
        with pytest.raises(DomainError):
            enumerate_knott(bad)
        with pytest.raises(DomainError):
            enumerate_natural(bad)


def test_enumeration_order_is_deterministic():
    ks = enumerate_knott(12)
    ordered = [(w.R, w.digit_string) for w in ks]
    assert ordered == sorted(ordered)
    assert enumerate_knott(12).members == ks.members


def test_enumeration_matches_counts():
    for n in range(1, 150):
        assert len(enumerate_knott(n)) == tot_kappa(n)
        assert len(enumerate_natural(n)) == tot_nu(n)


def test_members_satisfy_their_mode():
    for n in (7, 13, 40):
        beta = bergman_greedy(n)
        ks = enumerate_knott(n)
        assert ks.mode == "knott" and ks.target == n
        assert beta in ks
        for w in ks:
            assert satisfies_knott(w)
        ns = enumerate_natural(n)
        assert ns.mode == "natural"
        for w in ns:
            assert w.R == beta.R
        assert set(ns.members) <= set(ks.members)


def test_brute_force_example():
    # All binary words on [2, -6] evaluating to 1.
    result = brute_force_expansions(1, (2, -6))
    assert words(result) == {"1", "0.11", "0.1011", "0.101011"}
    assert result.target == 1


def test_brute_force_zero_and_empty():
    assert words(brute_force_expansions(0, (3, -3))) == {"0"}
    assert len(brute_force_expansions(7, (0, 0))) == 0


def test_brute_force_guards():
    with pytest.raises(GuardBoundError):
        brute_force_expansions(1, (0, -(BRUTE_FORCE_WINDOW_CAP + 1)))
    # Exactly at the cap is allowed.
    brute_force_expansions(1, (2, 2 - BRUTE_FORCE_WINDOW_CAP))
    with pytest.raises(DomainError):
        brute_force_expansions(1, (-1, 3))
    with pytest.raises(DomainError):
        brute_force_expansions(-1, (2, -2))


def test_brute_force_agrees_with_flip_closure():
    for n in range(1, 80):
        beta = bergman_greedy(n)
        window = (beta.L + 2, beta.R - 6)
        oracle = brute_force_expansions(n, window)
        knott_oracle = {str(w) for w in oracle if satisfies_knott(w)}
        assert knott_oracle == words(enumerate_knott(n))
        natural_oracle = {str(w) for w in oracle if w.R == beta.R}
        assert natural_oracle == words(enumerate_natural(n))
