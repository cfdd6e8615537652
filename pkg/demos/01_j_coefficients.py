# The j-invariant and its Fourier coefficients
#
# Everything in this package starts from the q-expansion of the modular
# j-invariant,
#
#     j(z) = 1/q + 744 + 196884 q + 21493760 q^2 + ...
#
# built exactly, with integer arithmetic only, from the classical formula
# j = E4^3 / Delta.  This script walks through the three series involved
# and checks that they fit together.

from modpoly import IntSeries, delta_series, e4_series, euler_factor_series, j_coefficients

# The Euler factor prod_{n>=1} (1 - q^n) comes from the pentagonal number
# theorem: only exponents k(3k-1)/2 carry a nonzero (+-1) coefficient.

euler = euler_factor_series(16)
print("euler factor:", euler)

# Its 24th power, shifted by q, is the discriminant form Delta whose
# coefficients are the Ramanujan tau numbers 1, -24, 252, -1472, ...

delta = delta_series(10)
print("tau(1..6):   ", [delta.coefficient(k) for k in range(1, 7)])

# The Eisenstein series E4 = 1 + 240 sum sigma_3(n) q^n needs nothing but
# a divisor-cube sieve.

e4 = e4_series(10)
print("E4 up to q^5:", [e4.coefficient(k) for k in range(6)])

# j = E4^3 / Delta is a Laurent series with a simple pole: dividing by
# Delta = q * (unit) shifts everything down one exponent.  j_coefficients
# packages the result as a lookup table c_{-1}, c_0, c_1, ...

table = j_coefficients(8)
print("c_{-1..7}:   ", list(table.values))

# Cross-check: multiplying back must reproduce E4^3 exactly, coefficient
# by coefficient, to the shared precision.

j_series = table.series()
product = j_series * delta_series(12)
cube = e4_series(10) ** 3
agree = all(
    product.coefficient(k) == cube.coefficient(k)
    for k in range(min(product.precision, cube.precision))
)
print("j * Delta == E4^3:", agree)

# The tail of the table already shows the 2- and 3-divisibility patterns
# that the divisibility checkers exploit: c_{r-1} for odd r >= 3 is
# divisible by 2^11, for instance.

c4 = table[4]  # r = 5
print("c_4 =", c4, "=", c4 // 2 ** 11, "* 2^11  (2^11 divides it:", c4 % 2 ** 11 == 0, ")")

# A deliberately out-of-range lookup fails loudly instead of returning
# garbage -- the series type refuses to invent coefficients beyond its
# precision.

try:
    IntSeries(0, (1, 2, 3)).coefficient(7)
except ValueError as err:
    print("precision guard:", err)
