"""Combinatorial kernels: partitions, multinomials, Stirling numbers, primes."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterator, NamedTuple


class PartitionTerm(NamedTuple):
    """A partition written as distinct parts r with multiplicities t.

    r is strictly increasing and positive, t[i] >= 1 counts how many times
    r[i] occurs.  weight() is the partitioned integer, u() is one less than
    the total number of parts.
    """

    r: tuple
    t: tuple

    def weight(self) -> int:
        return sum(ri * ti for ri, ti in zip(self.r, self.t))

    def u(self) -> int:
        return sum(self.t) - 1


def _descending_partitions(m: int) -> Iterator[list]:
    # parts in weakly decreasing order, enumerated in decreasing
    # lexicographic order starting from [m]; the yielded list is reused
    a = [m]
    while True:
        yield a
        k = len(a) - 1
        while k >= 0 and a[k] == 1:
            k -= 1
        if k < 0:
            return
        limit = a[k] - 1
        total = a[k] + (len(a) - k - 1)
        del a[k:]
        while total >= limit:
            a.append(limit)
            total -= limit
        if total:
            a.append(total)


def partitions(m: int) -> Iterator[PartitionTerm]:
    """All partitions of m, largest-part-first order, as PartitionTerm values.

    The order is deterministic: decreasing lexicographic on the parts
    sorted descending, so partitions(4) yields (4), (3,1), (2,2), (2,1,1),
    (1,1,1,1) in that sequence.  Terms are produced incrementally; the
    full list is never materialized.
    """
    if m < 1:
        raise ValueError("m must be positive")
    for parts in _descending_partitions(m):
        r = []
        t = []
        for p in reversed(parts):
            if r and r[-1] == p:
                t[-1] += 1
            else:
                r.append(p)
                t.append(1)
        yield PartitionTerm(tuple(r), tuple(t))


def binomial(n: int, k: int) -> int:
    """C(n, k) with C(n, k) = 0 for k > n >= 0; negative arguments are errors."""
    if n < 0:
        raise ValueError("binomial needs n >= 0, got %d" % n)
    if k < 0:
        raise ValueError("binomial needs k >= 0, got %d" % k)
    return math.comb(n, k)


def multinomial_top(u: int, t) -> Fraction:
    """u! / (t_1! * ... * t_k!) as an exact fraction, requiring u = sum(t) - 1."""
    t = tuple(t)
    if any(ti < 0 for ti in t):
        raise ValueError("multiplicities must be nonnegative")
    if u != sum(t) - 1:
        raise ValueError("u must equal sum(t) - 1, got u=%d for t=%r" % (u, t))
    den = 1
    for ti in t:
        den *= math.factorial(ti)
    return Fraction(math.factorial(u), den)


def full_multinomial(n: int, parts) -> int:
    """n! / prod(parts!) where parts sums to n exactly."""
    parts = tuple(parts)
    if n < 0 or any(p < 0 for p in parts):
        raise ValueError("arguments must be nonnegative")
    if sum(parts) != n:
        raise ValueError("parts %r must sum to n=%d" % (parts, n))
    out = 1
    rest = n
    for p in parts:
        out *= math.comb(rest, p)
        rest -= p
    return out


_stirling1_rows = [[1]]
_stirling2_rows = [[1]]


def stirling_first(n: int, k: int) -> int:
    """Signed Stirling number of the first kind: prod_{i<n} (x - i) = sum_k s(n,k) x^k."""
    if n < 0 or k < 0:
        raise ValueError("arguments must be nonnegative")
    if k > n:
        raise ValueError("need k <= n, got k=%d > n=%d" % (k, n))
    while len(_stirling1_rows) <= n:
        prev = _stirling1_rows[-1]
        i = len(_stirling1_rows) - 1
        row = [0] * (i + 2)
        for j, v in enumerate(prev):
            row[j + 1] += v
            row[j] -= i * v
        _stirling1_rows.append(row)
    return _stirling1_rows[n][k]


def stirling_second(d: int, n: int) -> int:
    """Stirling number of the second kind S(d, n); zero when 0 <= d < n."""
    if d < 0 or n < 0:
        raise ValueError("arguments must be nonnegative")
    if n > d:
        return 0
    while len(_stirling2_rows) <= d:
        prev = _stirling2_rows[-1]
        row = [0] * (len(_stirling2_rows) + 1)
        for j, v in enumerate(prev):
            if v:
                row[j] += j * v
                row[j + 1] += v
        _stirling2_rows.append(row)
    return _stirling2_rows[d][n]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    f = 5
    while f * f <= n:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


def primes_upto(n: int) -> list:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, int(n ** 0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [i for i, alive in enumerate(sieve) if alive]
