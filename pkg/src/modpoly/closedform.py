"""Closed partition-sum formulas for modular polynomial coefficients.

For a prime ell, write the classical modular polynomial of level ell as

    Phi_ell(X, Y) = X^{ell+1} + Y^{ell+1} + sum_{0<=m,n<=ell} a_{m,n} X^m Y^n

with a_{m,n} = a_{n,m} and a_{ell,ell} = -1.  The coefficients along the
top row are explicit integer linear combinations of monomials in the
j-invariant coefficients c_i: for 0 < m < ell,

    a_{ell,ell-m} = sum over partitions (r_1^{t_1} ... r_lam^{t_lam}) of m
        of  (-1)^u * (u! / prod t_i!) * ell * C(ell-m+u, u)
            * prod c_{r_i - 1}^{t_i},          u = sum t_i - 1,

and for m = ell the same sum applies with the binomial factor equal to 1,
plus an extra -(ell+1) * c_0.  The rational weight in front of each
monomial is provably an integer; term_weight computes it exactly and
raises IntegralityError if that ever fails, since a non-integer weight
means the inputs are outside the valid domain or the arithmetic is wrong.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .comb import PartitionTerm, binomial, is_prime, partitions
from .jfun import JTable


class IntegralityError(ArithmeticError):
    """A partition-term weight failed to be an integer."""


@dataclass(frozen=True)
class CoeffRequest:
    """A validated (ell, m) pair addressing the coefficient a_{ell, ell-m}."""

    ell: int
    m: int

    def __post_init__(self):
        if self.ell < 3 or not is_prime(self.ell):
            raise ValueError("ell must be a prime >= 3, got %r" % (self.ell,))
        if not 0 <= self.m <= self.ell:
            raise ValueError("m must lie in [0, ell], got m=%r for ell=%d" % (self.m, self.ell))


def term_weight(ell: int, m: int, term: PartitionTerm) -> int:
    """Integer weight of one partition term in the a_{ell,ell-m} sum.

    Value: (-1)^u * (u! / prod t_i!) * ell * C(ell-m+u, u) where u is one
    less than the number of parts.  Checked on every call: the partition
    must have weight m, m must not exceed ell, and the exact rational
    must reduce to an integer.
    """
    if term.weight() != m:
        raise ValueError("partition %r has weight %d, expected m=%d" % (term, term.weight(), m))
    if m > ell:
        raise ValueError("m=%d exceeds ell=%d" % (m, ell))
    u = term.u()
    den = 1
    for ti in term.t:
        den *= math.factorial(ti)
    w = Fraction(math.factorial(u) * ell * binomial(ell - m + u, u), den)
    if w.denominator != 1:
        raise IntegralityError(
            "integrality violation: weight %s for ell=%d, m=%d, term=%r" % (w, ell, m, term)
        )
    value = int(w)
    return -value if u % 2 else value


def coeff_closed(req: CoeffRequest, j: JTable) -> int:
    """a_{ell, ell-m} by direct evaluation of the partition sum."""
    ell, m = req.ell, req.m
    if m == 0:
        return -1
    if j.count < m:
        raise ValueError(
            "need j coefficients c_0..c_%d but table stops at c_%d" % (m - 1, j.count - 1)
        )
    c = j.values  # c[i] holds c_{i-1}, so c_{r-1} is c[r]
    total = 0
    for term in partitions(m):
        w = term_weight(ell, m, term)
        monomial = 1
        for ri, ti in zip(term.r, term.t):
            monomial *= c[ri] ** ti
        total += w * monomial
    if m == ell:
        total -= (ell + 1) * c[1]
    return total


def closed_row(ell: int, j: JTable, m_max: int | None = None) -> list:
    """[a_{ell,ell-m} for m = 0..m_max] via the partition sum."""
    if m_max is None:
        m_max = ell
    return [coeff_closed(CoeffRequest(ell, m), j) for m in range(m_max + 1)]


def coeff_small_m(req: CoeffRequest, j: JTable) -> int:
    """a_{ell, ell-m} for 1 <= m <= 7 from the expanded per-m expressions.

    These are the partition sums written out monomial by monomial, kept as
    an independently typed-up form: they share no code with coeff_closed,
    which makes them a useful cross-check and a fast path for small m.
    """
    ell, m = req.ell, req.m
    if m < 1 or m > 7:
        raise ValueError("small-m path covers 1 <= m <= 7, got m=%d" % m)
    if m >= ell:
        raise ValueError("small-m path needs m < ell, got m=%d, ell=%d" % (m, ell))
    if j.count < m:
        raise ValueError(
            "need j coefficients c_0..c_%d but table stops at c_%d" % (m - 1, j.count - 1)
        )
    L = ell
    c0 = j[0]
    if m == 1:
        return L * c0
    c1 = j[1]
    if m == 2:
        return L * c1 - binomial(L, 2) * c0 ** 2
    c2 = j[2]
    if m == 3:
        return L * c2 - L * (L - 2) * c0 * c1 + binomial(L, 3) * c0 ** 3
    c3 = j[3]
    if m == 4:
        v = (
            L * c3
            - L * (L - 3) * (Fraction(c1 * c1, 2) + c0 * c2)
            + L * binomial(L - 2, 2) * c0 ** 2 * c1
            - binomial(L, 4) * c0 ** 4
        )
    elif m == 5:
        c4 = j[4]
        v = Fraction(
            L * c4
            - L * (L - 4) * (c0 * c3 + c1 * c2)
            + L * binomial(L - 3, 2) * (c0 ** 2 * c2 + c0 * c1 ** 2)
            - L * binomial(L - 2, 3) * c0 ** 3 * c1
            + binomial(L, 5) * c0 ** 5
        )
    elif m == 6:
        c4, c5 = j[4], j[5]
        v = (
            L * c5
            - L * (L - 5) * (c4 * c0 + c3 * c1 + Fraction(c2 * c2, 2))
            + L * binomial(L - 4, 2) * (c3 * c0 ** 2 + 2 * c2 * c1 * c0 + Fraction(c1 ** 3, 3))
            - L * binomial(L - 3, 3) * (c2 * c0 ** 3 + Fraction(3 * c1 ** 2 * c0 ** 2, 2))
            + L * binomial(L - 2, 4) * c1 * c0 ** 4
            - binomial(L, 6) * c0 ** 6
        )
    else:
        c4, c5, c6 = j[4], j[5], j[6]
        v = Fraction(
            L * c6
            - L * (L - 6) * (c2 * c3 + c0 * c5 + c1 * c4)
            + L * binomial(L - 5, 2) * (c0 ** 2 * c4 + 2 * c0 * c1 * c3 + c1 ** 2 * c2 + c0 * c2 ** 2)
            - L * binomial(L - 4, 3) * (3 * c0 ** 2 * c1 * c2 + c0 ** 3 * c3 + c0 * c1 ** 3)
            + L * binomial(L - 3, 4) * (c0 ** 4 * c2 + 2 * c0 ** 3 * c1 ** 2)
            - L * binomial(L - 2, 5) * c0 ** 5 * c1
            + binomial(L, 7) * c0 ** 7
        )
    if v.denominator != 1:
        raise IntegralityError("expanded form for m=%d did not reduce to an integer" % m)
    return int(v)
