"""
Tests for the number kernel: factorials, generalized binomials, rational codec.
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from algebra.errors import UsageError
from algebra.numkernel import factorial, format_rational, generalized_binomial, parse_rational, to_rational


def test_generalized_binomial_examples():
    """Standard values, negative upper index and negative lower index."""
    assert generalized_binomial(5, 2) == 10
    assert generalized_binomial(0, -1) == 0
    assert generalized_binomial(-2, 1) == -2
    assert generalized_binomial(3, 5) == 0
    for k in range(8):
        assert generalized_binomial(-1, k) == (-1) ** k


def test_reflection_identity_exhaustive():
    """binom(n,k) - binom(n,n-k) = (-1)^k binom(k-n-1,-n-1) on n in [-10,10], k in [0,10]."""
    for n in range(-10, 11):
        for k in range(11):
            lhs = generalized_binomial(n, k) - generalized_binomial(n, n - k)
            assert lhs == (-1) ** k * generalized_binomial(k - n - 1, -n - 1), (n, k)


@given(st.integers(-30, 30), st.integers(1, 15))
@settings(max_examples=200, deadline=None)
def test_pascal_rule(n, k):
    """Pascal's rule holds for every integer upper index."""
    assert generalized_binomial(n, k) == generalized_binomial(n - 1, k) + generalized_binomial(n - 1, k - 1)


@given(st.integers(-20, 20), st.integers(0, 10))
@settings(max_examples=100, deadline=None)
def test_binomial_is_falling_factorial(n, k):
    """binom(n,k) * k! equals n(n-1)...(n-k+1)."""
    falling = 1
    for i in range(k):
        falling *= n - i
    assert generalized_binomial(n, k) * factorial(k) == falling


def test_factorial():
    assert factorial(0) == 1
    assert factorial(4) == 24
    with pytest.raises(UsageError):
        factorial(-1)


def test_rational_codec():
    """Rationals serialize as p/q, drop /1, and parse back exactly."""
    assert format_rational(Fraction(-3, 2)) == "-3/2"
    assert format_rational(Fraction(7)) == "7"
    assert parse_rational("6/4") == Fraction(3, 2)
    assert parse_rational("−5") == Fraction(-5)
    big = Fraction(2 ** 100 + 1, 3)
    assert parse_rational(format_rational(big)) == big


@pytest.mark.parametrize("text", ["0.5", "1e3", "", "1/0", "abc", "1 /2"])
def test_parse_rejects_inexact_or_malformed(text):
    with pytest.raises(UsageError):
        parse_rational(text)


def test_to_rational_rejects_floats():
    assert to_rational(3) == Fraction(3)
    with pytest.raises(UsageError):
        to_rational(0.5)
    with pytest.raises(UsageError):
        to_rational(True)
