"""Brute-force monogenicity oracle on fully expanded polynomials.

The axial Vekua residual is fast but indirect.  This module takes the
slow road on purpose: expand A + omega B into an honest polynomial in
the coordinates x0 .. xn with Clifford coefficients, hit it with
D = d/dx0 + sum_i e_i d/dx_i from the left, and ask whether everything
cancels.  Term counts grow quickly, so this is a desk-scale check
(intended for n up to 5 and degrees up to about 8); the axial residual
covers the high-degree sweeps.
"""

from __future__ import annotations

from typing import Mapping, Sequence, Tuple

from .axial import AxialPolynomial
from .clifford import Multivector


class CliffordPolynomial:
    """Polynomial in x0..xn whose coefficients are multivectors."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[Tuple[int, ...], Multivector] | None = None):
        self.n = n
        clean = {}
        if terms:
            for expo, mv in terms.items():
                expo = tuple(expo)
                if len(expo) != n + 1:
                    raise ValueError(
                        "exponent tuple %r must have n+1 = %d entries" % (expo, n + 1)
                    )
                if any(d < 0 for d in expo):
                    raise ValueError("negative exponent in %r" % (expo,))
                if mv.n != n:
                    raise ValueError("coefficient dimension %d, expected %d" % (mv.n, n))
                if not mv.is_zero:
                    clean[expo] = mv
        self._terms = clean

    @classmethod
    def zero(cls, n: int) -> "CliffordPolynomial":
        return cls(n, {})

    def terms(self):
        return self._terms.items()

    def coefficient(self, expo: Tuple[int, ...]) -> Multivector:
        return self._terms.get(tuple(expo), Multivector.zero(self.n))

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other):
        if not isinstance(other, CliffordPolynomial):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("dimension mismatch: %d vs %d" % (self.n, other.n))
        out = dict(self._terms)
        for expo, mv in other._terms.items():
            out[expo] = out[expo] + mv if expo in out else mv
        return CliffordPolynomial(self.n, out)

    def __sub__(self, other):
        if not isinstance(other, CliffordPolynomial):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return CliffordPolynomial(self.n, {e: -mv for e, mv in self._terms.items()})

    def __eq__(self, other):
        if not isinstance(other, CliffordPolynomial):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __repr__(self):
        return "CliffordPolynomial(%d, %d terms)" % (self.n, len(self._terms))

    def evaluate(self, point: Sequence) -> Multivector:
        """Value at (x0, .., xn); scalars may be exact or float."""
        if len(point) != self.n + 1:
            raise ValueError("point must have n+1 = %d coordinates" % (self.n + 1,))
        total = Multivector.zero(self.n)
        for expo, mv in self._terms.items():
            factor = 1
            for coord, power in zip(point, expo):
                factor = factor * coord**power
            total = total + mv * factor
        return total


def _norm_square_power(n: int, p: int) -> dict:
    """(x1^2 + ... + xn^2)^p as a map from vector exponents to integers."""
    out = {(0,) * n: 1}
    for _ in range(p):
        grown: dict = {}
        for expo, c in out.items():
            for m in range(n):
                key = expo[:m] + (expo[m] + 2,) + expo[m + 1 :]
                grown[key] = grown.get(key, 0) + c
        out = grown
    return out


def from_axial(F: AxialPolynomial) -> CliffordPolynomial:
    """Expand A(x0, r) + omega(x) B(x0, r) into coordinates.

    Even powers r^(2p) become (sum x_i^2)^p; the omega part uses
    r^(2p+1) omega = (sum x_i^2)^p (sum e_i x_i).  Parity of the two
    parts is what makes both substitutions polynomial.
    """
    n = F.n
    accum: dict = {}

    def add(expo: Tuple[int, ...], mv: Multivector) -> None:
        accum[expo] = accum[expo] + mv if expo in accum else mv

    for (i, j), c in F.A.terms():
        for vec_expo, mult in _norm_square_power(n, j // 2).items():
            add((i,) + vec_expo, Multivector.scalar(n, c * mult))
    for (i, j), c in F.B.terms():
        for vec_expo, mult in _norm_square_power(n, (j - 1) // 2).items():
            for m in range(n):
                expo = (i,) + vec_expo[:m] + (vec_expo[m] + 1,) + vec_expo[m + 1 :]
                add(expo, Multivector(n, {1 << m: c * mult}))
    return CliffordPolynomial(n, accum)


def cauchy_riemann_apply(P: CliffordPolynomial) -> CliffordPolynomial:
    """Left application of D = d/dx0 + sum_i e_i d/dx_i."""
    n = P.n
    out: dict = {}

    def add(expo: Tuple[int, ...], mv: Multivector) -> None:
        out[expo] = out[expo] + mv if expo in out else mv

    for expo, mv in P.terms():
        if expo[0]:
            add((expo[0] - 1,) + expo[1:], mv * expo[0])
        for i in range(1, n + 1):
            if expo[i]:
                lowered = expo[:i] + (expo[i] - 1,) + expo[i + 1 :]
                add(lowered, (Multivector.basis_vector(n, i) * mv) * expo[i])
    return CliffordPolynomial(n, out)


def is_monogenic(P: CliffordPolynomial) -> bool:
    """True exactly when D P is the zero polynomial."""
    return cauchy_riemann_apply(P).is_zero
