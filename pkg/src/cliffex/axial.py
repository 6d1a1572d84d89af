"""Axial polynomials A(x0, r) + omega B(x0, r) and their operators.

Everything the radial machinery touches lives in two variables: the
real part x0 and the radius r = |x|.  A pair (A, B) of bivariate
polynomials with A even in r and B odd in r describes a genuine
polynomial on R^(n+1) once r and omega are substituted back, and that
parity pair is the canonical representation used throughout.

The module provides the two radial lowering rules, their (n-1)/2-fold
application, the Vekua-type residual whose vanishing certifies
monogenicity, and exact/float point evaluation.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping, Tuple

from .clifford import Multivector, Paravector


def _require_odd_dimension(n: int) -> None:
    if n < 3 or n % 2 == 0:
        raise ValueError("n must be odd (> 1), got %r" % (n,))


class BivariatePoly:
    """Polynomial in (x0, r) with exact rational coefficients.

    Terms map exponent pairs (i, j) to coefficients; zero coefficients
    are never stored.  Instances are immutable.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Tuple[int, int], object] | None = None):
        clean = {}
        if terms:
            for (i, j), c in terms.items():
                if i < 0 or j < 0:
                    raise ValueError("negative exponent in term (%r, %r)" % (i, j))
                if c:
                    clean[(i, j)] = c
        self._terms = clean

    @classmethod
    def zero(cls) -> "BivariatePoly":
        return cls()

    @classmethod
    def monomial(cls, coeff, i: int, j: int) -> "BivariatePoly":
        return cls({(i, j): coeff})

    @classmethod
    def constant(cls, value) -> "BivariatePoly":
        return cls({(0, 0): value})

    def terms(self):
        return self._terms.items()

    def coefficient(self, i: int, j: int):
        return self._terms.get((i, j), 0)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def r_degrees(self) -> set:
        return {j for (_, j) in self._terms}

    def is_even_in_r(self) -> bool:
        return all(j % 2 == 0 for (_, j) in self._terms)

    def is_odd_in_r(self) -> bool:
        return all(j % 2 == 1 for (_, j) in self._terms)

    def __add__(self, other):
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        out = dict(self._terms)
        for key, c in other._terms.items():
            out[key] = out.get(key, 0) + c
        return BivariatePoly(out)

    def __sub__(self, other):
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return BivariatePoly({key: -c for key, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, BivariatePoly):
            out: dict[Tuple[int, int], object] = {}
            for (ia, ja), ca in self._terms.items():
                for (ib, jb), cb in other._terms.items():
                    key = (ia + ib, ja + jb)
                    out[key] = out.get(key, 0) + ca * cb
            return BivariatePoly(out)
        return BivariatePoly({key: c * other for key, c in self._terms.items()})

    def __rmul__(self, other):
        return BivariatePoly({key: other * c for key, c in self._terms.items()})

    def __eq__(self, other):
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        return "BivariatePoly(%r)" % (self._terms,)

    def diff_x0(self) -> "BivariatePoly":
        out = {}
        for (i, j), c in self._terms.items():
            if i > 0:
                out[(i - 1, j)] = i * c
        return BivariatePoly(out)

    def diff_r(self) -> "BivariatePoly":
        out = {}
        for (i, j), c in self._terms.items():
            if j > 0:
                out[(i, j - 1)] = j * c
        return BivariatePoly(out)

    def divide_r(self) -> "BivariatePoly":
        """Exact quotient by r; every term must have positive r-degree."""
        out = {}
        for (i, j), c in self._terms.items():
            if j == 0:
                raise ValueError("term with r-degree 0 is not divisible by r")
            out[(i, j - 1)] = c
        return BivariatePoly(out)

    def evaluate(self, x0, r):
        """Plain substitution; works for exact and float arguments alike."""
        total = 0
        for (i, j), c in self._terms.items():
            total += c * x0**i * r**j
        return total

    def evaluate_even(self, x0, r_sq):
        """Substitute r^2 = r_sq.  Requires every r-degree to be even.

        This is the radical-free route: no square root of r_sq is ever
        taken, so exact rational points stay exact.
        """
        total = 0
        for (i, j), c in self._terms.items():
            if j % 2:
                raise ValueError("odd r-degree %d cannot use the r^2 substitution" % j)
            total += c * x0**i * r_sq ** (j // 2)
        return total


class AxialPolynomial:
    """A(x0, r) + omega(x) B(x0, r) with the parity invariants enforced.

    A must be even in r and B odd in r; that is exactly the condition
    under which the pair describes a polynomial map on R^(n+1).
    """

    __slots__ = ("A", "B", "n")

    def __init__(self, A: BivariatePoly, B: BivariatePoly, n: int):
        _require_odd_dimension(n)
        if not A.is_even_in_r():
            raise ValueError("scalar part has a term with odd r-degree")
        if not B.is_odd_in_r():
            raise ValueError("omega part has a term with even r-degree")
        self.A = A
        self.B = B
        self.n = n

    @classmethod
    def zero(cls, n: int) -> "AxialPolynomial":
        return cls(BivariatePoly.zero(), BivariatePoly.zero(), n)

    @classmethod
    def constant(cls, value, n: int) -> "AxialPolynomial":
        return cls(BivariatePoly.constant(value), BivariatePoly.zero(), n)

    @property
    def is_zero(self) -> bool:
        return self.A.is_zero and self.B.is_zero

    def __add__(self, other):
        if not isinstance(other, AxialPolynomial):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("dimension mismatch: %d vs %d" % (self.n, other.n))
        return AxialPolynomial(self.A + other.A, self.B + other.B, self.n)

    def __sub__(self, other):
        if not isinstance(other, AxialPolynomial):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return AxialPolynomial(-self.A, -self.B, self.n)

    def __mul__(self, scalar):
        return AxialPolynomial(self.A * scalar, self.B * scalar, self.n)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, AxialPolynomial):
            return NotImplemented
        return self.n == other.n and self.A == other.A and self.B == other.B

    def __hash__(self):
        return hash((self.n, self.A, self.B))

    def diff_x0(self) -> "AxialPolynomial":
        return AxialPolynomial(self.A.diff_x0(), self.B.diff_x0(), self.n)

    def __repr__(self):
        return "AxialPolynomial(A=%r, B=%r, n=%d)" % (self.A, self.B, self.n)

    def __str__(self):
        return text_form(self)

    def to_json_dict(self) -> dict:
        def part(p: BivariatePoly) -> list:
            rows = []
            for (i, j) in sorted(p._terms, key=lambda key: (-key[0], -key[1])):
                rows.append({"x0": i, "r": j, "coeff": format_rational(p._terms[(i, j)])})
            return rows

        return {"n": self.n, "A": part(self.A), "B": part(self.B)}


def radial_lower_even(p: BivariatePoly) -> BivariatePoly:
    """One application of (1/r) d/dr to a polynomial even in r.

    r^(2p) maps to 2p r^(2p-2); r-constant terms vanish.  A term of odd
    r-degree would leave the polynomial ring, so it is rejected.
    """
    out = {}
    for (i, j), c in p.terms():
        if j % 2:
            raise ValueError("even-lowering rule applied to odd r-degree %d" % j)
        if j >= 2:
            key = (i, j - 2)
            out[key] = out.get(key, 0) + j * c
    return BivariatePoly(out)


def radial_lower_odd(p: BivariatePoly) -> BivariatePoly:
    """One application of d/dr (1/r) to a polynomial odd in r.

    r^(2p+1) maps to 2p r^(2p-1); bare r terms vanish.
    """
    out = {}
    for (i, j), c in p.terms():
        if j % 2 == 0:
            raise ValueError("odd-lowering rule applied to even r-degree %d" % j)
        if j >= 3:
            key = (i, j - 2)
            out[key] = out.get(key, 0) + (j - 1) * c
    return BivariatePoly(out)


def apply_radial_powers(uv: Tuple[BivariatePoly, BivariatePoly], n: int) -> AxialPolynomial:
    """(n-1)/2 lowering steps on each half of an (even, odd) pair.

    Annihilated input is a legitimate outcome and comes back as the
    zero polynomial, not an error.
    """
    _require_odd_dimension(n)
    u, v = uv
    steps = (n - 1) // 2
    for _ in range(steps):
        u = radial_lower_even(u)
        v = radial_lower_odd(v)
    return AxialPolynomial(u, v, n)


def vekua_residual(F: AxialPolynomial) -> Tuple[BivariatePoly, BivariatePoly]:
    """The pair whose joint vanishing makes A + omega B monogenic.

    Returns (d_x0 A - d_r B - (n-1) B/r, d_x0 B + d_r A).  The division
    B/r is exact because B is odd in r, so both components are honest
    polynomials and "zero" is decidable.
    """
    n = F.n
    quotient = F.B.divide_r() if not F.B.is_zero else BivariatePoly.zero()
    first = F.A.diff_x0() - F.B.diff_r() - (n - 1) * quotient
    second = F.B.diff_x0() + F.A.diff_r()
    return first, second


def evaluate(F: AxialPolynomial, x: Paravector, mode: str = "exact") -> Multivector:
    """Value of A + omega B at a paravector point, as a multivector.

    Exact mode never materializes |x|: A is evaluated through r^2 and
    omega B = x * C(x0, r^2) with B = r C.  Float mode goes the naive
    way through math.sqrt, which doubles as an independent numeric
    cross-check of the exact route.  x with zero vector part is fine in
    both modes since B is odd in r.
    """
    if x.n != F.n:
        raise ValueError("point dimension %d does not match polynomial dimension %d" % (x.n, F.n))
    if mode == "exact":
        r_sq = x.vector_norm_sq()
        scalar = F.A.evaluate_even(x.x0, r_sq)
        coeffs = {0: scalar}
        if not F.B.is_zero and r_sq:
            c_val = F.B.divide_r().evaluate_even(x.x0, r_sq)
            for idx, comp in enumerate(x.vec):
                if comp:
                    coeffs[1 << idx] = comp * c_val
        return Multivector(F.n, coeffs)
    if mode == "float":
        r = math.sqrt(float(x.vector_norm_sq()))
        x0 = float(x.x0)
        scalar = float(F.A.evaluate(x0, r))
        coeffs = {0: scalar}
        if r:
            b_val = float(F.B.evaluate(x0, r))
            for idx, comp in enumerate(x.vec):
                unit = float(comp) / r
                if unit * b_val:
                    coeffs[1 << idx] = unit * b_val
        return Multivector(F.n, coeffs)
    raise ValueError("mode must be 'exact' or 'float', got %r" % (mode,))


def format_rational(c) -> str:
    """Exact coefficients as p/q (or a bare integer); floats via repr."""
    if isinstance(c, float):
        return repr(c)
    frac = Fraction(c)
    if frac.denominator == 1:
        return str(frac.numerator)
    return "%d/%d" % (frac.numerator, frac.denominator)


def _monomial_text(coeff, i: int, j: int, omega_part: bool) -> str:
    pieces = []
    if i:
        pieces.append("x0" if i == 1 else "x0^%d" % i)
    if j:
        pieces.append("r" if j == 1 else "r^%d" % j)
    if omega_part:
        pieces.append("w")
    mag = format_rational(abs(coeff) if not isinstance(coeff, float) else abs(coeff))
    if not pieces:
        return mag
    if mag != "1":
        pieces.insert(0, mag)
    return " ".join(pieces)


def text_form(F: AxialPolynomial) -> str:
    """Canonical one-line rendering, e.g. "x0 + 1/3 r w".

    All terms of both parts are merged and sorted by x0-degree, then
    r-degree, descending; omega shows up as a trailing w.  The parity
    invariants guarantee the sort key never collides across parts.
    """
    entries = []
    for (i, j), c in F.A.terms():
        entries.append((i, j, c, False))
    for (i, j), c in F.B.terms():
        entries.append((i, j, c, True))
    if not entries:
        return "0"
    entries.sort(key=lambda e: (-e[0], -e[1]))
    out = ""
    for pos, (i, j, c, omega_part) in enumerate(entries):
        body = _monomial_text(c, i, j, omega_part)
        negative = c < 0
        if pos == 0:
            out = ("-" + body) if negative else body
        else:
            out += (" - " if negative else " + ") + body
    return out
