"""Independent routes to modular polynomial coefficients.

Three mechanisms live here, all sharing only the j-invariant table with
the closed formulas in closedform, which is what makes them usable as
cross-checks:

1. a power-series recurrence: letting jhat = q*j = 1 + 744 q + ..., the
   top-row coefficients satisfy, for 0 < m < ell,

       a_{ell,ell-m} = - sum_{n=0}^{m-1} a_{ell,ell-n} * [q^{m-n}] jhat^{ell-n}

   with a_{ell,ell} = -1 starting the recursion, and for m = ell

       a_{ell,0} = -(ell+1) c_0 - sum_{n=0}^{ell-1} a_{ell,ell-n} * [q^{ell-n}] jhat^{ell-n};

2. rational d-weights attached to sub-multiplicity splits of a partition,
   together with a sum rule they must satisfy (verify_d_recurrence);

3. a full solver that determines every a_{m,n} at once from the defining
   identity Phi_ell(j(ell z), j(z)) = 0, by exact elimination on the
   principal part of the q-expansion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .comb import full_multinomial, is_prime
from .jfun import JTable
from .qseries import IntSeries, PrecisionError


class InconsistentSystemError(ArithmeticError):
    """The elimination met a nonzero residual it cannot cancel."""


class ModularPolynomial:
    """Symmetric coefficient table a_{m,n} of Phi_ell plus the monic terms.

    Entries are stored for 0 <= n <= m <= ell; lookups symmetrize.  Pairs
    not supplied to the constructor default to 0.  The corner entry
    a_{ell,ell} must be -1.
    """

    __slots__ = ("ell", "_entries")

    def __init__(self, ell: int, entries):
        if ell < 2 or not is_prime(ell):
            raise ValueError("ell must be prime, got %r" % (ell,))
        table = {}
        for (m, n), v in dict(entries).items():
            if not (0 <= n <= ell and 0 <= m <= ell):
                raise ValueError("index (%r, %r) outside [0, %d]^2" % (m, n, ell))
            if not isinstance(v, int):
                raise TypeError("coefficient at (%d, %d) must be an integer" % (m, n))
            key = (m, n) if m >= n else (n, m)
            if key in table and table[key] != v:
                raise ValueError("conflicting values for symmetric pair %r" % (key,))
            table[key] = v
        for m in range(ell + 1):
            for n in range(m + 1):
                table.setdefault((m, n), 0)
        if table[(ell, ell)] != -1:
            raise ValueError("a_{ell,ell} must be -1, got %d" % table[(ell, ell)])
        self.ell = ell
        self._entries = table

    def get(self, m: int, n: int) -> int:
        key = (m, n) if m >= n else (n, m)
        return self._entries[key]

    def items(self):
        """(m, n, value) triples for 0 <= n <= m <= ell, m then n descending."""
        for m in range(self.ell, -1, -1):
            for n in range(m, -1, -1):
                yield m, n, self._entries[(m, n)]

    def top_row(self) -> list:
        """[a_{ell, ell-m} for m = 0..ell]."""
        return [self.get(self.ell, self.ell - m) for m in range(self.ell + 1)]

    def __eq__(self, other):
        if not isinstance(other, ModularPolynomial):
            return NotImplemented
        return self.ell == other.ell and self._entries == other._entries

    def __repr__(self):
        return "ModularPolynomial(ell=%d, %d entries)" % (self.ell, len(self._entries))


def jhat_power_coeff(N: int, k: int, j: JTable) -> int:
    """Coefficient of q^k in (q*j)^N = (sum_{i>=0} c_{i-1} q^i)^N."""
    if N < 0 or k < 0:
        raise ValueError("N and k must be nonnegative")
    if j.count < k:
        raise ValueError("need %d j coefficients, table has %d" % (k, j.count))
    return (j.hat_series(k + 1) ** N).coefficient(k)


_ROW_CACHE: dict = {}


def recurrence_row(ell: int, j: JTable, m_max: int | None = None) -> list:
    """[a_{ell,ell-m} for m = 0..m_max] via the power-series recurrence.

    Rows are memoized per (ell, j-prefix); concurrent calls for distinct
    ell are safe, the worst interleaving recomputes a row.
    """
    if ell < 3 or not is_prime(ell):
        raise ValueError("ell must be a prime >= 3, got %r" % (ell,))
    if m_max is None:
        m_max = ell
    if not 0 <= m_max <= ell:
        raise ValueError("m_max must lie in [0, ell]")
    if j.count < m_max:
        raise ValueError("need %d j coefficients, table has %d" % (m_max, j.count))
    key = (ell, j.values[: ell + 1])
    cached = _ROW_CACHE.get(key)
    if cached is not None and len(cached) > m_max:
        return list(cached[: m_max + 1])

    prec = m_max + 1
    hat = j.hat_series(prec)
    powers = [IntSeries.one(prec)]
    for _ in range(ell):
        powers.append(powers[-1] * hat)

    row = [-1]
    for m in range(1, m_max + 1):
        if m < ell:
            acc = 0
            for n in range(m):
                acc += row[n] * powers[ell - n].coefficient(m - n)
            row.append(-acc)
        else:
            acc = 0
            for n in range(ell):
                acc += row[n] * powers[ell - n].coefficient(ell - n)
            row.append(-(ell + 1) * j[0] - acc)
    _ROW_CACHE[key] = list(row)
    return row


def coeff_recurrence(ell: int, m: int, j: JTable) -> int:
    """a_{ell, ell-m} from the recurrence; intermediate row values are memoized."""
    return recurrence_row(ell, j, m)[m]


@dataclass(frozen=True)
class DWeight:
    """Addresses the split weight d for partition parts r at multiplicities t1.

    r must be strictly increasing and positive; t1 are the chosen
    sub-multiplicities, with sum(t1[i] * r[i]) <= ell.
    """

    ell: int
    r: tuple
    t1: tuple

    def __post_init__(self):
        if len(self.r) != len(self.t1):
            raise ValueError("r and t1 must have equal length")
        if any(ri < 1 for ri in self.r):
            raise ValueError("parts must be positive")
        if any(a >= b for a, b in zip(self.r, self.r[1:])):
            raise ValueError("parts must be strictly increasing")
        if any(ti < 0 for ti in self.t1):
            raise ValueError("t1 entries must be nonnegative")
        if sum(ri * ti for ri, ti in zip(self.r, self.t1)) > self.ell:
            raise ValueError("sum(t1*r) must not exceed ell")


def d_weight(w: DWeight, t_full) -> Fraction:
    """Exact rational value of the split weight, validated against t_full.

    t_full holds the full multiplicities the split was taken from, so
    every t1[i] must satisfy 0 <= t1[i] <= t_full[i].  For s = sum(t1)
    and W = sum(t1*r):

        d = (-1)^(s-1) * (1 / prod t1_i!) * ell * (ell-1-W+s)! / (ell-W)!

    The all-zero split evaluates to -1, consistent with reading the
    formula at s = 0.
    """
    t_full = tuple(t_full)
    if len(t_full) != len(w.t1):
        raise ValueError("t_full and t1 must have equal length")
    if any(a > b for a, b in zip(w.t1, t_full)):
        raise ValueError("split multiplicities exceed the full ones")
    s = sum(w.t1)
    W = sum(ri * ti for ri, ti in zip(w.r, w.t1))
    den = 1
    for ti in w.t1:
        den *= math.factorial(ti)
    val = Fraction(
        w.ell * math.factorial(w.ell - 1 - W + s),
        den * math.factorial(w.ell - W),
    )
    return val if s % 2 else -val


def verify_d_recurrence(ell: int, r, t) -> bool:
    """Check the sum rule tying a full split weight to all proper sub-splits.

    With n = ell - sum(t1*r) for each proper sub-split t1 of t, and
    t2 = t - t1, the rule is

        d(r; t) = - sum_{t1 proper} d(r; t1) * C(n; t2_1, ..., t2_lam, n - sum(t2)).

    Returns True when the identity holds exactly.
    """
    r = tuple(r)
    t = tuple(t)
    if not is_prime(ell):
        raise ValueError("ell must be prime")
    if len(r) != len(t) or any(ti < 1 for ti in t):
        raise ValueError("t must give positive multiplicity for each part")
    lhs = d_weight(DWeight(ell, r, t), t)
    rhs = Fraction(0)
    splits = [()]
    for ti in t:
        splits = [prefix + (x,) for prefix in splits for x in range(ti + 1)]
    for t1 in splits:
        if t1 == t:
            continue
        n = ell - sum(ri * ai for ri, ai in zip(r, t1))
        t2 = tuple(ti - ai for ti, ai in zip(t, t1))
        parts = t2 + (n - sum(t2),)
        rhs -= d_weight(DWeight(ell, r, t1), t) * full_multinomial(n, parts)
    return lhs == rhs


def _spread_series(j: JTable, ell: int) -> IntSeries:
    # j(ell*z): coefficient c_{i-1} moves to exponent ell*(i-1)
    K = j.count
    block = [0] * (ell * K + 1)
    for i, v in enumerate(j.values):
        block[ell * i] = v
    return IntSeries(-ell, block, ell * (K - 1) + 1)


def _power_tables(ell: int, j: JTable):
    K = j.count
    one_prec = (ell + 1) * K + 1
    s1 = _spread_series(j, ell)
    t1 = j.series()
    S = [IntSeries.one(one_prec), s1]
    T = [IntSeries.one(one_prec), t1]
    for _ in range(ell):
        S.append(S[-1] * s1)
        T.append(T[-1] * t1)
    return S, T


def _pair_basis(S, T, m: int, n: int) -> IntSeries:
    if m == n:
        return S[m] * T[m]
    return S[m] * T[n] + S[n] * T[m]


def solve_full_polynomial(ell: int, j: JTable) -> ModularPolynomial:
    """Determine every a_{m,n} from the vanishing of Phi_ell(j(ell z), j(z)).

    Substituting the q-expansions turns the defining identity into a
    triangular linear system: the basis element for the pair (m, n) has
    pole order ell*m + n, those orders are pairwise distinct over
    0 <= n <= m <= ell, and each pivot coefficient is 1.  Unknowns are
    eliminated in decreasing pole order; exponents that correspond to no
    pair must already have residual zero, and after the last unknown the
    whole remaining expansion must vanish up to the working precision.
    Raises InconsistentSystemError otherwise, and PrecisionError when the
    table is shorter than ell^2 + ell + 2 coefficients.
    """
    if not is_prime(ell):
        raise ValueError("ell must be prime, got %r" % (ell,))
    need = ell * ell + ell + 2
    if j.count < need:
        raise PrecisionError(
            "solving level %d needs at least %d j coefficients, table has %d"
            % (ell, need, j.count)
        )
    S, T = _power_tables(ell, j)
    residual = S[ell + 1] + T[ell + 1]
    entries = {}
    prev_exponent = -(ell * ell + ell) - 1
    for m in range(ell, -1, -1):
        for n in range(m, -1, -1):
            e = -(ell * m + n)
            for gap in range(prev_exponent + 1, e):
                if residual.coefficient(gap) != 0:
                    raise InconsistentSystemError(
                        "nonzero residual %d at q^%d matches no coefficient"
                        % (residual.coefficient(gap), gap)
                    )
            basis = _pair_basis(S, T, m, n)
            pivot = basis.coefficient(e)
            value = Fraction(-residual.coefficient(e), pivot)
            if value.denominator != 1:
                raise InconsistentSystemError(
                    "coefficient at pair (%d, %d) is not an integer: %s" % (m, n, value)
                )
            a = int(value)
            entries[(m, n)] = a
            if a:
                residual = residual + basis * a
            prev_exponent = e
    for e in range(1, residual.precision):
        if residual.coefficient(e) != 0:
            raise InconsistentSystemError(
                "residual %d survives at q^%d after eliminating all pairs"
                % (residual.coefficient(e), e)
            )
    return ModularPolynomial(ell, entries)


def polynomial_residual(poly: ModularPolynomial, j: JTable) -> IntSeries:
    """q-expansion of Phi_ell(j(ell z), j(z)) for a given coefficient table.

    Identically zero, to the table's precision, exactly when poly really
    is the level-ell modular polynomial.
    """
    ell = poly.ell
    S, T = _power_tables(ell, j)
    residual = S[ell + 1] + T[ell + 1]
    for m, n, a in poly.items():
        if a:
            residual = residual + _pair_basis(S, T, m, n) * a
    return residual
