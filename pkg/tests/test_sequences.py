from math import factorial

import pytest

from alteuler.combinatorics import StatKind, stat_polynomial
from alteuler.poly import Poly
from alteuler.sequences import (
    Family, alt_eulerian_coeff_explicit, alt_eulerian_explicit, alt_eulerian_recurrence,
    alt_eulerian_transform, classical_eulerian, classical_eulerian_brute,
    derivative_coeff_explicit, derivative_coeff_recurrence, derivative_poly, e_coeff,
    e_coeff_closed, e_coeff_printed, generate, peak_poly, tilde_p, tilde_p_recurrence,
)

LISTED_ALT = {
    1: [1],
    2: [1, 1],
    3: [2, 2, 2],
    4: [5, 7, 7, 5],
    5: [16, 26, 36, 26, 16],
}
LISTED_P = {
    1: [1, 0, 1],
    2: [0, 2, 0, 2],
    3: [2, 0, 8, 0, 6],
    4: [0, 16, 0, 40, 0, 24],
}


def test_derivative_poly_examples():
    assert derivative_poly(0) == Poly([0, 1])
    for n, coeffs in LISTED_P.items():
        assert derivative_poly(n) == Poly(coeffs)


def test_derivative_coeff_recurrence_examples():
    assert derivative_coeff_recurrence(3, 4) == 6
    assert derivative_coeff_recurrence(4, 1) == 16
    assert derivative_coeff_recurrence(2, 0) == 0
    assert derivative_coeff_recurrence(3, 9) == 0


def test_derivative_coeff_explicit_examples():
    assert derivative_coeff_explicit(3, 0) == 6
    assert derivative_coeff_explicit(4, 2) == 16
    assert derivative_coeff_explicit(6, 1) == derivative_coeff_recurrence(6, 5)
    with pytest.raises(ValueError):
        derivative_coeff_explicit(4, 3)


@pytest.mark.parametrize("n", range(1, 41))
def test_explicit_stirling_formula(n):
    for k in range((n + 1) // 2 + 1):
        assert derivative_coeff_explicit(n, k) == derivative_coeff_recurrence(n, n - 2 * k + 1)


def test_coefficient_recurrence_matches_polynomial_route():
    for n in range(0, 30):
        assert Poly(derivative_coeff_recurrence(n, k) for k in range(n + 2)) == derivative_poly(n)


def test_derivative_parity_and_degree():
    for n in range(0, 41):
        p = derivative_poly(n)
        assert p.degree == n + 1
        assert all(c >= 0 for c in p.coeffs)
        assert p.compose(Poly([0, -1])) == p * (-1) ** (n + 1)
        if n % 2 == 0:
            assert p[0] == 0 and p[1] != 0  # x divides P_2n exactly once


def test_alt_eulerian_listed_values():
    for n, coeffs in LISTED_ALT.items():
        assert alt_eulerian_recurrence(n) == Poly(coeffs)
        assert alt_eulerian_transform(n) == Poly(coeffs)
        assert alt_eulerian_explicit(n) == Poly(coeffs)


@pytest.mark.parametrize("n", range(1, 11))
def test_alt_eulerian_brute_force(n):
    assert alt_eulerian_recurrence(n) == stat_polynomial(n, StatKind.ALT_DESCENT)


def test_alt_eulerian_routes_agree():
    for n in range(1, 31):
        a = alt_eulerian_recurrence(n)
        assert a == alt_eulerian_transform(n)
        assert a.degree == n - 1
        assert a.is_palindromic()
        assert a(1) == factorial(n)
        if n <= 20:
            assert a == alt_eulerian_explicit(n)


def test_alt_coeff_explicit_examples():
    assert alt_eulerian_coeff_explicit(3, 1) == 7
    assert alt_eulerian_coeff_explicit(4, 0) == 16
    assert alt_eulerian_coeff_explicit(5, 2) == alt_eulerian_recurrence(6)[2]
    with pytest.raises(ValueError):
        alt_eulerian_coeff_explicit(3, 4)


def test_e_coeff_examples():
    from math import comb
    for n in range(0, 9):
        for s in range(n + 1):
            assert e_coeff(n, 0, s) == comb(n, s)
    assert all(e_coeff(n, k, 0) == 1 for n in range(8) for k in range(n // 2 + 1))
    assert e_coeff(4, 1, 2) == -2


def test_e_coeff_closed_form_agrees_with_expansion():
    for n in range(0, 16):
        for k in range(n // 2 + 1):
            for s in range(n + 1):
                assert e_coeff_closed(n, k, s) == e_coeff(n, k, s)


def test_e_coeff_printed_limit_disagrees():
    assert e_coeff_printed(4, 1, 2) == 1 != e_coeff(4, 1, 2)


def test_peak_poly_examples():
    assert peak_poly(1) == Poly([1])
    assert peak_poly(2) == Poly([2])
    assert peak_poly(3) == Poly([4, 2])
    assert peak_poly(4) == Poly([8, 16])


@pytest.mark.parametrize("n", range(1, 10))
def test_peak_poly_brute_force(n):
    assert peak_poly(n) == stat_polynomial(n, StatKind.INTERIOR_PEAK)


def test_classical_eulerian():
    assert classical_eulerian(1) == Poly([1])
    assert classical_eulerian(3) == Poly([1, 4, 1])
    assert classical_eulerian(4) == Poly([1, 11, 11, 1])
    for n in range(1, 9):
        assert classical_eulerian(n) == classical_eulerian_brute(n)


def test_tilde_p_examples():
    assert tilde_p(1) == Poly([1, 0, -1])
    assert tilde_p(2) == Poly([0, -2, 0, 2])
    assert Poly([1, 0, -1]) * tilde_p(1).derivative() == tilde_p(2)


def test_tilde_p_routes_agree():
    for n in range(0, 30):
        t = tilde_p(n)
        assert t == tilde_p_recurrence(n)
        assert t.is_integral() and t.degree == n + 1


def test_tilde_p_is_rotated_derivative_polynomial():
    # i^(n-1) P_n(i x) evaluated with Gaussian integers at x = 2 + i
    x = complex(2, 1)
    for n in range(1, 12):
        direct = (1j) ** (n - 1) * derivative_poly(n)(1j * x)
        assert abs(direct - tilde_p(n)(x)) < 1e-6 * abs(direct)


def test_generate_rows():
    row = generate("alt-eulerian", 5)
    assert row.family is Family.ALT_EULERIAN and row.poly == Poly(LISTED_ALT[5])
    with pytest.raises(ValueError):
        generate(Family.PEAK, 0)
