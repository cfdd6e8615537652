"""q-expansions feeding the modular polynomial computations.

Everything is derived from three classical series:

* the Euler product prod_{n>=1} (1 - q^n), expanded sparsely via the
  pentagonal number theorem;
* the discriminant form Delta = q * prod_{n>=1} (1 - q^n)^24;
* the weight-4 Eisenstein series E4 = 1 + 240 * sum sigma_3(n) q^n.

The j-invariant is the quotient E4^3 / Delta = 1/q + 744 + 196884 q + ...
Its coefficients c_i (i >= -1) are what the closed coefficient formulas
consume, packaged in a JTable indexed from -1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .qseries import IntSeries


def euler_factor_series(precision: int) -> IntSeries:
    """prod_{n>=1} (1 - q^n) truncated below q^precision."""
    if precision < 1:
        raise ValueError("precision must be at least 1")
    coeffs = [0] * precision
    coeffs[0] = 1
    k = 1
    while True:
        g1 = k * (3 * k - 1) // 2
        g2 = k * (3 * k + 1) // 2
        if g1 >= precision and g2 >= precision:
            break
        sign = -1 if k % 2 else 1
        if g1 < precision:
            coeffs[g1] = sign
        if g2 < precision:
            coeffs[g2] = sign
        k += 1
    return IntSeries(0, coeffs, precision)


def delta_series(precision: int) -> IntSeries:
    """Discriminant form q * prod (1 - q^n)^24, leading coefficient 1 at q."""
    if precision < 2:
        raise ValueError("precision must be at least 2")
    eta24 = euler_factor_series(precision - 1) ** 24
    return eta24.shift(1)


def e4_series(precision: int) -> IntSeries:
    """Eisenstein series of weight 4: constant term 1, then 240*sigma_3(n)."""
    if precision < 1:
        raise ValueError("precision must be at least 1")
    coeffs = [0] * precision
    coeffs[0] = 1
    for d in range(1, precision):
        cube240 = 240 * d * d * d
        for n in range(d, precision, d):
            coeffs[n] += cube240
    return IntSeries(0, coeffs, precision)


@dataclass(frozen=True)
class JTable:
    """Coefficients c_{-1}, c_0, ..., c_{count-1} of the j-invariant.

    ``values[i]`` holds c_{i-1}; indexing with [] uses the natural offset,
    so table[-1] == 1 and table[0] == 744.  Construction validates the
    pinned leading coefficients, which guards against passing a table
    built from the wrong series.
    """

    values: tuple

    def __post_init__(self):
        v = self.values
        if not isinstance(v, tuple) or len(v) < 1:
            raise ValueError("need at least the coefficient c_{-1}")
        if v[0] != 1:
            raise ValueError("c_{-1} must be 1, got %r" % (v[0],))
        if len(v) >= 2 and v[1] != 744:
            raise ValueError("c_0 must be 744, got %r" % (v[1],))
        if len(v) >= 3 and v[2] != 196884:
            raise ValueError("c_1 must be 196884, got %r" % (v[2],))

    @property
    def count(self) -> int:
        """Number of coefficients available at index 0 and beyond."""
        return len(self.values) - 1

    def __getitem__(self, i: int) -> int:
        if i < -1 or i >= self.count:
            raise IndexError("coefficient index %d outside [-1, %d)" % (i, self.count))
        return self.values[i + 1]

    def series(self, precision: int | None = None) -> IntSeries:
        """The j-invariant itself as an IntSeries with base exponent -1."""
        if precision is None:
            precision = self.count
        if precision > self.count:
            raise ValueError("table holds %d coefficients, cannot reach precision %d"
                             % (self.count, precision))
        return IntSeries(-1, self.values[: precision + 1], precision)

    def hat_series(self, precision: int) -> IntSeries:
        """q * j = sum_{i>=0} c_{i-1} q^i, the constant-1-leading variant."""
        if precision < 1:
            raise ValueError("precision must be at least 1")
        if precision > self.count + 1:
            raise ValueError("table holds %d coefficients, need %d for precision %d"
                             % (self.count, precision - 1, precision))
        return IntSeries(0, self.values[:precision], precision)


def j_coefficients(count: int) -> JTable:
    """Compute c_{-1} .. c_{count-1} exactly as E4^3 / Delta."""
    if count < 1:
        raise ValueError("count must be at least 1")
    e4cubed = e4_series(count + 1) ** 3
    inv_delta = delta_series(count + 2).invert(count)
    j = e4cubed * inv_delta
    return JTable(tuple(j.coefficient(i) for i in range(-1, count)))
