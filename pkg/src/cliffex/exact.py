"""Exact rational arithmetic and the combinatorial building blocks.

Every coefficient in this package is a :class:`Rational` (an alias for
``fractions.Fraction``): arbitrary-precision, always in lowest terms,
never rounded.  The helpers below are the factorial-type functions the
Appell coefficients, the radial-operator images and the hypergeometric
term weights are assembled from.

All values are immutable and all functions are pure, so everything here
is safe to share between threads or tasks.
"""

from __future__ import annotations

import math
from fractions import Fraction

Rational = Fraction

__all__ = [
    "Rational",
    "factorial",
    "double_factorial",
    "binomial",
    "pochhammer",
]


def factorial(m: int) -> int:
    """m! for m >= 0.  Raises ValueError for negative m."""
    if m < 0:
        raise ValueError("factorial is undefined for negative integers: %r" % (m,))
    return math.factorial(m)


def double_factorial(m: int) -> int:
    """m!! = m (m-2) (m-4) ... with the conventions 0!! = (-1)!! = 1.

    The empty-product value at m = -1 makes boundary coefficients come
    out right: the degree-0 Appell coefficient is (-1)!! (n-2)!!/(n-2)!!
    and must equal 1.
    """
    if m < -1:
        raise ValueError("double factorial is undefined below -1: %r" % (m,))
    out = 1
    while m > 1:
        out *= m
        m -= 2
    return out


def binomial(k: int, s: int) -> int:
    """C(k, s) for k >= 0, with value 0 whenever s < 0 or s > k."""
    if k < 0:
        raise ValueError("binomial requires k >= 0, got %r" % (k,))
    if s < 0 or s > k:
        return 0
    return math.comb(k, s)


def pochhammer(q: Rational | int, l: int) -> Rational:
    """Rising factorial (q)_l = q (q+1) ... (q+l-1), with (q)_0 = 1."""
    if l < 0:
        raise ValueError("pochhammer requires l >= 0, got %r" % (l,))
    out = Fraction(1)
    q = Fraction(q)
    for i in range(l):
        out *= q + i
    return out
