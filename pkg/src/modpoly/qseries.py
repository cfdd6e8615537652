"""Truncated Laurent series with unbounded integer coefficients.

An IntSeries stores a dense block of coefficients starting at
``base_exponent`` together with an explicit ``precision``: the coefficient
of q^e is known exactly for every e < precision and is unknown at or past
it.  Reading an unknown coefficient raises PrecisionError rather than
returning 0, so a precision bug surfaces at the point of use instead of
propagating silently.

Arithmetic tracks precision pessimistically:

* add: result precision is the minimum of the operand precisions;
* mul: result precision is min(a.precision + b.base_exponent,
  b.precision + a.base_exponent), the first exponent at which an unknown
  coefficient of either factor could contribute;
* invert: requires a unit leading coefficient (+1 or -1) so the inverse
  stays integral.

Values are immutable.  Instances with equal base, coefficient block and
precision compare equal, and normalization trims leading zeros (raising
the base) so equal series have a unique representation.
"""

from __future__ import annotations


class PrecisionError(ValueError):
    """A coefficient beyond the stated precision was requested."""


class IntSeries:
    __slots__ = ("base_exponent", "coeffs", "precision")

    def __init__(self, base_exponent: int, coeffs, precision: int | None = None):
        block = list(coeffs)
        for c in block:
            if not isinstance(c, int):
                raise TypeError("coefficients must be plain integers, got %r" % type(c).__name__)
        if precision is None:
            precision = base_exponent + len(block)
        want = precision - base_exponent
        if want < 0:
            block = []
        elif len(block) > want:
            del block[want:]
        else:
            block.extend([0] * (want - len(block)))
        # normal form: leading stored coefficient nonzero, zero series collapses
        # to an empty block with base_exponent == precision
        drop = 0
        while drop < len(block) and block[drop] == 0:
            drop += 1
        object.__setattr__(self, "base_exponent", base_exponent + drop if drop < len(block) else precision)
        object.__setattr__(self, "coeffs", tuple(block[drop:]))
        object.__setattr__(self, "precision", precision)

    def __setattr__(self, name, value):
        raise AttributeError("IntSeries is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, precision: int) -> "IntSeries":
        return cls(precision, (), precision)

    @classmethod
    def one(cls, precision: int) -> "IntSeries":
        return cls(0, (1,), precision)

    @classmethod
    def monomial(cls, coefficient: int, exponent: int, precision: int) -> "IntSeries":
        if exponent >= precision:
            raise PrecisionError("monomial exponent %d not below precision %d" % (exponent, precision))
        return cls(exponent, (coefficient,), precision)

    # -- queries -------------------------------------------------------

    def coefficient(self, k: int) -> int:
        """Exact coefficient of q^k; raises PrecisionError if k >= precision."""
        if k >= self.precision:
            raise PrecisionError(
                "coefficient of q^%d requested but series is only known below q^%d"
                % (k, self.precision)
            )
        if k < self.base_exponent:
            return 0
        return self.coeffs[k - self.base_exponent]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, IntSeries):
            return NotImplemented
        return (
            self.base_exponent == other.base_exponent
            and self.precision == other.precision
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.base_exponent, self.coeffs, self.precision))

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coeffs[:6]):
            if c == 0:
                continue
            e = self.base_exponent + i
            if e == 0:
                terms.append("%d" % c)
            else:
                terms.append("%d*q^%d" % (c, e))
        if len(self.coeffs) > 6:
            terms.append("...")
        body = " + ".join(terms) if terms else "0"
        return "IntSeries(%s + O(q^%d))" % (body, self.precision)

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, IntSeries):
            return NotImplemented
        prec = min(self.precision, other.precision)
        base = min(self.base_exponent, other.base_exponent, prec)
        out = [0] * (prec - base)
        for s in (self, other):
            off = s.base_exponent - base
            for i, c in enumerate(s.coeffs):
                if off + i >= len(out):
                    break
                out[off + i] += c
        return IntSeries(base, out, prec)

    def __neg__(self):
        return IntSeries(self.base_exponent, tuple(-c for c in self.coeffs), self.precision)

    def __sub__(self, other):
        if not isinstance(other, IntSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return IntSeries.zero(self.precision)
            return IntSeries(
                self.base_exponent, tuple(c * other for c in self.coeffs), self.precision
            )
        if not isinstance(other, IntSeries):
            return NotImplemented
        base = self.base_exponent + other.base_exponent
        prec = min(
            self.precision + other.base_exponent,
            other.precision + self.base_exponent,
        )
        out = [0] * (prec - base)
        n = len(out)
        bco = other.coeffs
        for i, a in enumerate(self.coeffs):
            if a:
                top = min(len(bco), n - i)
                for j in range(top):
                    b = bco[j]
                    if b:
                        out[i + j] += a * b
        return IntSeries(base, out, prec)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            raise ValueError("exponent must be nonnegative")
        if n == 0:
            # empty product: 1 at this series' precision shifted to base 0
            return IntSeries(0, (1,), self.precision - self.base_exponent)
        result = None
        square = self
        while True:
            if n & 1:
                result = square if result is None else result * square
            n >>= 1
            if not n:
                return result
            square = square * square

    def shift(self, k: int) -> "IntSeries":
        """Exact multiplication by the monomial q^k."""
        return IntSeries(self.base_exponent + k, self.coeffs, self.precision + k)

    def truncate(self, precision: int) -> "IntSeries":
        if precision > self.precision:
            raise PrecisionError(
                "cannot extend precision from %d to %d" % (self.precision, precision)
            )
        if precision == self.precision:
            return self
        return IntSeries(self.base_exponent, self.coeffs, precision)

    def invert(self, out_precision: int) -> "IntSeries":
        """Multiplicative inverse, known below q^out_precision.

        The leading coefficient must be +1 or -1 (a unit over the
        integers), and the input must carry enough coefficients:
        precision - 2 * base_exponent >= out_precision.
        """
        if not self.coeffs:
            raise ValueError("cannot invert the zero series")
        unit = self.coeffs[0]
        if unit not in (1, -1):
            raise ValueError(
                "leading coefficient must be +1 or -1 to invert over the integers, got %d" % unit
            )
        b = self.base_exponent
        count = out_precision + b  # inverse coefficients at exponents -b .. out_precision-1
        if count > self.precision - b:
            raise PrecisionError(
                "inverting to precision %d needs input precision %d, have %d"
                % (out_precision, out_precision + 2 * b, self.precision)
            )
        if count <= 0:
            return IntSeries.zero(out_precision)
        a = self.coeffs
        inv = [unit] + [0] * (count - 1)
        for e in range(1, count):
            acc = 0
            for i in range(1, e + 1):
                ai = a[i]
                if ai:
                    acc += ai * inv[e - i]
            inv[e] = -unit * acc
        return IntSeries(-b, inv, out_precision)
