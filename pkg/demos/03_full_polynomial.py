# Solving for the whole modular polynomial
#
# The defining property of Phi_ell is Phi_ell(j(ell z), j(z)) = 0 as a
# q-series identity.  Truncating every series involved turns that into a
# triangular linear system over the integers: each coefficient a_{m,n}
# is pinned down by the vanishing of one pole order.  The solver
# eliminates in decreasing pole order with exact rational arithmetic and
# refuses to return anything whose residual is not identically zero.

from modpoly import j_coefficients, polynomial_residual, solve_full_polynomial

# Level 2 first: four nontrivial coefficients, solved from a series with
# eight q-coefficients.

phi2 = solve_full_polynomial(2, j_coefficients(8))
print("Phi_2 coefficients:")
for m, n, v in phi2.items():
    print("  a_%d%d = %d" % (m, n, v))

# Level 5 is the classic table: 21 coefficients, some of them 48 digits
# long.  The level-ell solve needs ell^2 + ell + 2 j-coefficients.

phi5 = solve_full_polynomial(5, j_coefficients(32))
a00 = phi5.get(0, 0)
print("Phi_5 constant term a_00 = %d" % a00)
print("  digits:", len(str(a00)), " ord_2 = 90:", a00 % 2 ** 90 == 0 and a00 % 2 ** 91 != 0)

# The top row of the solved polynomial must match the closed formula row
# computed by a completely different method.

from modpoly import closed_row

print("top row matches closed formula:", phi5.top_row() == closed_row(5, j_coefficients(5)))

# At level 7 two corner coefficients vanish identically -- the smallest
# prime where that happens -- so the constant term of Phi_7 is zero.

phi7 = solve_full_polynomial(7, j_coefficients(58))
print("Phi_7: a_00 =", phi7.get(0, 0), " a_10 =", phi7.get(1, 0))

# Substituting the truncated series back in is the final word: the
# residual series must have no computable nonzero coefficient at all.

residual = polynomial_residual(phi5, j_coefficients(32))
print("Phi_5 residual series:", residual, "(empty coefficient block = zero series)")

# Corrupting a single coefficient by 1 makes the residual light up
# immediately, which is what the inconsistency guards inside the solver
# are listening for.

from modpoly import ModularPolynomial

entries = {(m, n): v for m, n, v in phi2.items()}
entries[(1, 0)] += 1
bad = ModularPolynomial(2, entries)
print("corrupted Phi_2 residual starts at q^%d" % polynomial_residual(bad, j_coefficients(8)).base_exponent)
