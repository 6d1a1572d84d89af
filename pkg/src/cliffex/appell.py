"""The Appell sequence P_k^n of paravector-valued polynomials.

Two facts pin the sequence down: the derivative rule d/dx0 P_k = k
P_(k-1) with P_k(1) = 1, and the restriction to pure vectors P_k(x) =
c_n^k x^k.  Integrating the first from the second forces the explicit
binomial form used here, and every defining property is re-verified as
an exact identity by the test suite, so the construction certifies
itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .axial import AxialPolynomial, BivariatePoly
from .exact import binomial, double_factorial


def c_coeff(n: int, k: int) -> Fraction:
    """The restriction constant c_n^k.

    Even k: (k-1)!!(n-2)!!/(n+k-2)!!.  Odd k: k!!(n-2)!!/(n+k-1)!!.
    Both use the 0!! = (-1)!! = 1 convention, so c_n^0 = 1.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError("n must be odd (> 1), got %r" % (n,))
    if k < 0:
        raise ValueError("k must be nonnegative, got %r" % (k,))
    if k % 2 == 0:
        return Fraction(
            double_factorial(k - 1) * double_factorial(n - 2),
            double_factorial(n + k - 2),
        )
    return Fraction(
        double_factorial(k) * double_factorial(n - 2),
        double_factorial(n + k - 1),
    )


def c_table(n: int, K: int) -> list[Fraction]:
    """c_n^0 .. c_n^K as a list, the CLI-facing dump."""
    return [c_coeff(n, k) for k in range(K + 1)]


def appell_polynomial(n: int, k: int) -> AxialPolynomial:
    """P_k^n in axial form.

    Expands sum_s C(k,s) c_n^s x0^(k-s) x^s with the vector powers
    folded into (r, omega): x^(2p) = (-1)^p r^(2p) lands in the scalar
    part, x^(2p+1) = (-1)^p r^(2p+1) omega in the omega part.
    """
    a_terms: dict = {}
    b_terms: dict = {}
    for s in range(k + 1):
        weight = binomial(k, s) * c_coeff(n, s)
        p, odd = divmod(s, 2)
        signed = -weight if p % 2 else weight
        target = b_terms if odd else a_terms
        key = (k - s, s)
        target[key] = target.get(key, 0) + signed
    return AxialPolynomial(BivariatePoly(a_terms), BivariatePoly(b_terms), n)


@dataclass(frozen=True)
class AppellPropertyReport:
    """Outcome of the derivative-rule sweep d/dx0 P_k = k P_(k-1)."""

    n: int
    checked_up_to: int
    holds: bool
    first_failure: int | None = None


def appell_property_check(n: int, K: int) -> AppellPropertyReport:
    """Verify d/dx0 P_k^n = k P_(k-1)^n exactly for k = 1..K."""
    if K < 1:
        raise ValueError("K must be at least 1, got %r" % (K,))
    previous = appell_polynomial(n, 0)
    for k in range(1, K + 1):
        current = appell_polynomial(n, k)
        if current.diff_x0() != k * previous:
            return AppellPropertyReport(n, K, False, first_failure=k)
        previous = current
    return AppellPropertyReport(n, K, True)
