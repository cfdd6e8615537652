"""Recurrence row oracle, d-weight bookkeeping, and the full-polynomial solver."""

from fractions import Fraction

import pytest
from conftest import PHI2_KNOWN, PHI5_FACTORED
from hypothesis import given, settings, strategies as st

from modpoly import (
    DWeight,
    InconsistentSystemError,
    JTable,
    ModularPolynomial,
    PartitionTerm,
    closed_row,
    coeff_recurrence,
    d_weight,
    full_multinomial,
    j_coefficients,
    jhat_power_coeff,
    partitions,
    polynomial_residual,
    recurrence_row,
    solve_full_polynomial,
    term_weight,
    verify_d_recurrence,
)

J = j_coefficients(60)


# --- jhat_power_coeff ----------------------------------------------------


def jhat_power_brute(N, k, j):
    # multiply out (1 + c_0 q + ... + c_{k-1} q^k)^N with plain lists
    base = [1] + [j[i] for i in range(k)]
    acc = [1]
    for _ in range(N):
        out = [0] * (k + 1)
        for i, x in enumerate(acc):
            if i > k:
                break
            for d, y in enumerate(base):
                if i + d <= k:
                    out[i + d] += x * y
        acc = out
    return acc[k] if k < len(acc) else 0


def test_jhat_power_constant_term():
    for N in (1, 2, 5, 20):
        assert jhat_power_coeff(N, 0, J) == 1


def test_jhat_power_first_order():
    assert jhat_power_coeff(5, 1, J) == 5 * 744 == 3720


def test_jhat_power_second_order():
    assert jhat_power_coeff(5, 2, J) == 5 * 196884 + 10 * 744 ** 2 == 6519780


@settings(deadline=None)
@given(N=st.integers(1, 9), k=st.integers(0, 8))
def test_jhat_power_matches_brute_force(N, k):
    assert jhat_power_coeff(N, k, J) == jhat_power_brute(N, k, J)


def test_jhat_power_requires_coefficients():
    with pytest.raises(ValueError):
        jhat_power_coeff(3, 9, j_coefficients(8))


# --- coeff_recurrence / recurrence_row ------------------------------------


def test_recurrence_level_five_values():
    assert coeff_recurrence(5, 0, J) == -1
    assert coeff_recurrence(5, 1, J) == 3720
    assert coeff_recurrence(5, 5, J) == PHI5_FACTORED[(0, 5)]


def test_recurrence_row_matches_level_five_table():
    row = recurrence_row(5, J)
    assert row == [PHI5_FACTORED[(5 - m, 5)] for m in range(6)]


@pytest.mark.parametrize("ell", [3, 5, 7, 11, 13])
def test_recurrence_agrees_with_closed_form(ell):
    assert recurrence_row(ell, J) == closed_row(ell, J)


def test_recurrence_row_prefix():
    assert recurrence_row(7, J, m_max=3) == recurrence_row(7, J)[:4]


def test_recurrence_row_deterministic():
    assert recurrence_row(11, J) == recurrence_row(11, J)


def test_recurrence_requires_enough_coefficients():
    with pytest.raises(ValueError):
        recurrence_row(11, j_coefficients(6))


# --- ModularPolynomial ---------------------------------------------------


def build_phi5():
    return ModularPolynomial(5, dict(PHI5_FACTORED))


def test_polynomial_symmetric_get():
    poly = build_phi5()
    assert poly.get(0, 3) == poly.get(3, 0) == PHI5_FACTORED[(0, 3)]
    assert poly.get(5, 5) == -1


def test_polynomial_top_row():
    poly = build_phi5()
    assert poly.top_row() == [PHI5_FACTORED[(5 - m, 5)] for m in range(6)]


def test_polynomial_items_cover_lower_triangle():
    poly = build_phi5()
    seen = {(m, n) for m, n, _ in poly.items()}
    assert seen == {(m, n) for m in range(6) for n in range(m + 1)}
    values = {(m, n): v for m, n, v in poly.items()}
    assert values[(5, 0)] == PHI5_FACTORED[(0, 5)]


def test_polynomial_missing_entries_default_zero():
    poly = ModularPolynomial(3, {(3, 3): -1})
    assert poly.get(0, 0) == 0
    assert poly.top_row() == [-1, 0, 0, 0]


def test_polynomial_validation():
    with pytest.raises(ValueError):
        ModularPolynomial(4, {(4, 4): -1})
    with pytest.raises(ValueError):
        ModularPolynomial(3, {(3, 3): 1})
    with pytest.raises(ValueError):
        ModularPolynomial(3, {(3, 3): -1, (4, 0): 2})
    with pytest.raises(ValueError):
        ModularPolynomial(3, {(3, 3): -1, (1, 0): 5, (0, 1): 6})
    with pytest.raises(TypeError):
        ModularPolynomial(3, {(3, 3): -1, (1, 0): 1.5})


def test_polynomial_equality():
    assert build_phi5() == build_phi5()
    assert build_phi5() != ModularPolynomial(5, {(5, 5): -1})


# --- d-weights ------------------------------------------------------------


def test_d_weight_zero_split_is_minus_one():
    w = DWeight(5, (1, 2), (0, 0))
    assert d_weight(w, (2, 1)) == -1


def test_d_weight_simple_values():
    assert d_weight(DWeight(5, (1,), (1,)), (1,)) == 5
    assert d_weight(DWeight(7, (2,), (3,)), (3,)) == 7
    assert d_weight(DWeight(7, (2,), (3,)), (3,)) == term_weight(
        7, 6, PartitionTerm((2,), (3,))
    )


def test_d_weight_matches_term_weight_at_full_split():
    # taking every part into the split reproduces the closed-formula weight
    for ell in (11, 13):
        for m in range(1, 7):
            for term in partitions(m):
                w = DWeight(ell, term.r, term.t)
                assert d_weight(w, term.t) == term_weight(ell, m, term), (ell, term)


def test_d_weight_is_exact_rational():
    # ell=7, r=(1,), t1=(2,): sign (-1), 1/2! * 7 * (6-2+2)!/(5)! = 7*6/2 = 21
    assert d_weight(DWeight(7, (1,), (2,)), (3,)) == Fraction(-21)


def test_d_weight_validation():
    with pytest.raises(ValueError):
        DWeight(5, (1, 2), (1,))  # length mismatch
    with pytest.raises(ValueError):
        DWeight(5, (2, 1), (1, 1))  # not increasing
    with pytest.raises(ValueError):
        DWeight(5, (1, 3), (3, 1))  # weighted sum exceeds ell
    with pytest.raises(ValueError):
        d_weight(DWeight(5, (1,), (2,)), (1,))  # split exceeds multiplicity
    with pytest.raises(ValueError):
        d_weight(DWeight(5, (1,), (1,)), (1, 1))  # t_full length mismatch


def test_verify_d_recurrence_examples():
    assert verify_d_recurrence(5, (1,), (2,))
    assert verify_d_recurrence(7, (1, 2), (1, 1))
    assert verify_d_recurrence(11, (3,), (1,))


def test_verify_d_recurrence_sweep():
    for ell in (11, 13):
        for m in range(1, 9):
            for term in partitions(m):
                assert verify_d_recurrence(ell, term.r, term.t), (ell, term)


# --- full-polynomial solver -------------------------------------------------


def test_solver_level_two_classical():
    poly = solve_full_polynomial(2, j_coefficients(8))
    assert {(m, n): v for m, n, v in poly.items()} == PHI2_KNOWN


def test_solver_level_five_full_table():
    poly = solve_full_polynomial(5, j_coefficients(32))
    for (m, n), expected in PHI5_FACTORED.items():
        assert poly.get(m, n) == expected, (m, n)


def test_solver_level_seven_vanishing_corner():
    poly = solve_full_polynomial(7, j_coefficients(58))
    assert poly.get(0, 0) == 0
    assert poly.get(1, 0) == 0
    assert poly.top_row() == closed_row(7, J)


def test_solver_residual_vanishes():
    for ell, count in ((2, 8), (3, 14)):
        poly = solve_full_polynomial(ell, j_coefficients(count))
        residual = polynomial_residual(poly, j_coefficients(count))
        assert not residual.coeffs, residual
        assert residual.precision > 0


def test_residual_detects_corruption():
    poly = solve_full_polynomial(2, j_coefficients(8))
    entries = {(m, n): v for m, n, v in poly.items()}
    entries[(1, 0)] += 1
    bad = ModularPolynomial(2, entries)
    residual = polynomial_residual(bad, j_coefficients(8))
    assert residual.coeffs


def test_solver_requires_precision():
    with pytest.raises(ValueError):
        solve_full_polynomial(5, j_coefficients(20))


def test_solver_rejects_corrupt_series():
    values = list(j_coefficients(8).values)
    values[4] += 1  # corrupt c_3
    with pytest.raises(InconsistentSystemError):
        solve_full_polynomial(2, JTable(tuple(values)))


def test_inconsistent_system_error_type():
    assert issubclass(InconsistentSystemError, ArithmeticError)
