"""
Number Kernel - Exact Scalars and Binomials

This module holds the scalar layer everything else is built on:
1. Exact rationals (Python's Fraction, always in lowest terms)
2. Factorials
3. Generalized binomial coefficients for ANY integer upper index
4. String codec for rationals ("p/q", or just "p" when q = 1)

Student Guide:
--------------
Why a generalized binomial?
- binom(n, k) = n(n-1)...(n-k+1)/k! makes sense for negative n too
  * binom(-1, k) = (-1)^k
  * binom(-2, 1) = -2
- Virtual bundles have negative ranks, so Chern class formulas hit
  negative upper indices all the time
- A negative LOWER index always gives 0

Key identity (checked exhaustively in the tests):
    binom(n, k) - binom(n, n-k) = (-1)^k * binom(k-n-1, -n-1)
"""

import logging
import math
from fractions import Fraction
from typing import Union

from algebra.errors import UsageError

logger = logging.getLogger(__name__)

RationalLike = Union[int, Fraction]


def factorial(n: int) -> int:
    """
    Return n! for n >= 0.

    Args:
        n: Nonnegative integer

    Returns:
        n! as an arbitrary-precision integer

    Raises:
        UsageError: If n is negative

    Example:
        factorial(4)   # 24
    """
    if n < 0:
        raise UsageError(f"factorial of negative integer {n}")
    return math.factorial(n)


def generalized_binomial(n: int, k: int) -> int:
    """
    Falling-factorial binomial coefficient, valid for every integer n.

    Rules:
    - k < 0            -> 0
    - n >= 0           -> ordinary binomial (0 when k > n)
    - n < 0            -> (-1)^k * binom(k - n - 1, k)

    Args:
        n: Upper index (any integer)
        k: Lower index (any integer)

    Returns:
        The coefficient as an int

    Example:
        generalized_binomial(5, 2)    # 10
        generalized_binomial(-2, 1)   # -2
        generalized_binomial(0, -1)   # 0
    """
    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k)
    # Upper negation: binom(n, k) = (-1)^k binom(k - n - 1, k)
    sign = -1 if k % 2 else 1
    return sign * math.comb(k - n - 1, k)


def to_rational(value: RationalLike) -> Fraction:
    """Coerce an int or Fraction to Fraction (no floats)."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    raise UsageError(f"expected an exact rational, got {type(value).__name__}")


def format_rational(value: Fraction) -> str:
    """
    Serialize a rational as "p/q", dropping "/1".

    Example:
        format_rational(Fraction(-3, 2))   # "-3/2"
        format_rational(Fraction(7))       # "7"
    """
    return str(value)


def parse_rational(text: str) -> Fraction:
    """
    Parse "p/q" or "p" into a Fraction.

    Accepts the unicode minus sign as well as "-". Decimal and float
    notation is rejected so that nothing inexact sneaks in.

    Raises:
        UsageError: On anything that is not an exact integer ratio
    """
    if not isinstance(text, str):
        raise UsageError(f"rational must be a string, got {type(text).__name__}")
    cleaned = text.strip().replace("−", "-")
    if not cleaned or any(ch in cleaned for ch in ".eE "):
        raise UsageError(f"not an exact rational: {text!r}")
    try:
        value = Fraction(cleaned)
    except (ValueError, ZeroDivisionError) as e:
        raise UsageError(f"not an exact rational: {text!r}") from e
    return value
