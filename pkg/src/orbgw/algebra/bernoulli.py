"""Bernoulli numbers and polynomials over the rationals (B_1 = -1/2)."""

from fractions import Fraction
from functools import lru_cache
from math import comb

__all__ = ["bernoulli_number", "bernoulli_poly", "bernoulli_coefficients"]


@lru_cache(maxsize=None)
def bernoulli_number(n: int) -> Fraction:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return Fraction(1)
    # sum_{k<n+1} C(n+1, k) B_k = 0
    s = sum(comb(n + 1, k) * bernoulli_number(k) for k in range(n))
    return -s / (n + 1)


@lru_cache(maxsize=None)
def bernoulli_coefficients(t: int) -> tuple:
    """Coefficients c_j of B_t(x) = sum_j c_j x^j, lowest degree first."""
    if t < 0:
        raise ValueError("t must be nonnegative")
    return tuple(comb(t, j) * bernoulli_number(t - j) for j in range(t + 1))


@lru_cache(maxsize=None)
def bernoulli_poly(t: int, x) -> Fraction:
    x = Fraction(x)
    acc = Fraction(0)
    for c in reversed(bernoulli_coefficients(t)):
        acc = acc * x + c
    return acc
