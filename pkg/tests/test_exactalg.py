"""Exact matrices, polynomials, characteristic polynomials, closed forms."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spg.exactalg import (
    InexactDivision,
    IntMatrix,
    IntPolynomial,
    NotPrime,
    PrimeOrTrivialN,
    UnsupportedN,
    adjacency_charpoly_formula,
    bareiss_det,
    binom_power,
    charpoly,
    distance_charpoly_formula,
    permuted,
    poly_div_exact,
    poly_eval,
    poly_mul,
    prime_adjacency_charpoly,
)
from spg.graphs import adjacency_matrix, distance_matrix, strong_power_graph
from spg.groups import CyclicGroup, is_prime


def test_charpoly_swap_matrix():
    assert charpoly(IntMatrix([[0, 1], [1, 0]])) == IntPolynomial([-1, 0, 1])


def test_charpoly_identity():
    assert charpoly(IntMatrix.identity(3)) == IntPolynomial([-1, 3, -3, 1])


def test_charpoly_one_by_one():
    assert charpoly(IntMatrix([[5]])) == IntPolynomial([-5, 1])


def test_charpoly_adjacency_z4():
    a = adjacency_matrix(strong_power_graph(CyclicGroup(4)))
    poly = charpoly(a)
    assert poly == IntPolynomial([1, -2, -4, 0, 1])
    # x^3 coefficient is -trace = 0; x^2 coefficient is -|E| = -4
    assert poly.coefficient(3) == 0
    assert poly.coefficient(2) == -4


def test_charpoly_trace_and_edge_coefficients():
    for n in (5, 9, 16, 24):
        graph = strong_power_graph(CyclicGroup(n))
        poly = charpoly(adjacency_matrix(graph))
        assert poly.coefficient(n - 1) == 0, n
        assert poly.coefficient(n - 2) == -graph.edge_count(), n


def test_charpoly_is_monic():
    rng = random.Random(7)
    for n in (1, 2, 5, 11):
        m = IntMatrix([[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)])
        poly = charpoly(m)
        assert poly.degree == n and poly.is_monic()


def test_charpoly_invariant_under_permutation():
    rng = random.Random(99)
    for n in (6, 12, 30):
        graph = strong_power_graph(CyclicGroup(n))
        for matrix in (adjacency_matrix(graph), distance_matrix(graph)):
            order = list(range(n))
            rng.shuffle(order)
            assert charpoly(permuted(matrix, order)) == charpoly(matrix), n


def test_charpoly_large_entries():
    big = 10**30
    m = IntMatrix([[big, 1], [1, -big]])
    # det = -big^2 - 1, trace = 0
    assert charpoly(m) == IntPolynomial([-(big * big) - 1, 0, 1])


def test_bareiss_det_examples():
    assert bareiss_det(IntMatrix([[0, 1], [1, 0]])) == -1
    assert bareiss_det(IntMatrix.identity(4)) == 1
    assert bareiss_det(IntMatrix([[1, 2], [2, 4]])) == 0
    assert bareiss_det(IntMatrix([[0, 0], [0, 0]])) == 0


def test_bareiss_matches_charpoly_constant():
    # det(M) = (-1)^n * charpoly(M)(0), checked on graph matrices up to n = 40
    for n in (4, 9, 25, 40):
        graph = strong_power_graph(CyclicGroup(n))
        for matrix in (adjacency_matrix(graph), distance_matrix(graph)):
            constant = charpoly(matrix).coefficient(0)
            assert bareiss_det(matrix) == (-1) ** n * constant, n


@settings(max_examples=150, deadline=None)
@given(
    st.integers(1, 6).flatmap(
        lambda n: st.tuples(
            st.lists(
                st.lists(st.integers(-9, 9), min_size=n, max_size=n),
                min_size=n,
                max_size=n,
            ),
            st.integers(-5, 5),
        )
    )
)
def test_charpoly_evaluates_to_shifted_determinant(case):
    rows, x0 = case
    m = IntMatrix(rows)
    shifted = IntMatrix(
        [
            [x0 * (1 if i == j else 0) - m.rows[i][j] for j in range(m.n)]
            for i in range(m.n)
        ]
    )
    assert poly_eval(charpoly(m), x0) == bareiss_det(shifted)


def test_poly_mul_and_eval():
    p = poly_mul(IntPolynomial([1, 1]), IntPolynomial([-7, -11, -1, 1]))
    assert p == IntPolynomial([-7, -18, -12, 0, 1])
    assert poly_eval(IntPolynomial([-7, -11, -1, 1]), -1) == 2
    assert poly_eval(IntPolynomial([-7, -11, -1, 1]), Fraction(1, 2)) == Fraction(-101, 8)
    assert poly_eval(IntPolynomial([]), 3) == 0


def test_binom_power():
    assert binom_power(0) == IntPolynomial([1])
    assert binom_power(2) == IntPolynomial([1, 2, 1])
    assert binom_power(5).coefficient(2) == 10


def test_poly_div_exact():
    q, exact = poly_div_exact(IntPolynomial([0, 0, 1, 1]), IntPolynomial([1, 1]))
    assert exact and q == IntPolynomial([0, 0, 1])
    _, exact = poly_div_exact(IntPolynomial([1, 0, 1]), IntPolynomial([1, 1]))
    assert not exact
    product = poly_mul(IntPolynomial([1, 1]), IntPolynomial([-7, -11, -1, 1]))
    q, exact = poly_div_exact(product, IntPolynomial([1, 1]))
    assert exact and q == IntPolynomial([-7, -11, -1, 1])
    with pytest.raises(ZeroDivisionError):
        poly_div_exact(IntPolynomial([1]), IntPolynomial([]))


@settings(max_examples=100, deadline=None)
@given(
    st.lists(st.integers(-50, 50), min_size=1, max_size=6),
    st.lists(st.integers(-50, 50), min_size=1, max_size=6),
)
def test_poly_div_inverts_mul(a_coeffs, b_coeffs):
    a, b = IntPolynomial(a_coeffs), IntPolynomial(b_coeffs)
    if not b.coeffs:
        return
    q, exact = poly_div_exact(poly_mul(a, b), b)
    assert exact and q == a


def test_distance_formula_n4():
    assert distance_charpoly_formula(4) == IntPolynomial([-7, -18, -12, 0, 1])


def test_distance_formula_n6_cubic_constant():
    # cubic part: x^3 - 3x^2 - 15x - 5 (constant from the formula, confirmed
    # against the exact charpoly of the actual distance matrix below)
    cubic = IntPolynomial([-5, -15, -3, 1])
    assert distance_charpoly_formula(6) == poly_mul(binom_power(3), cubic)
    d = distance_matrix(strong_power_graph(CyclicGroup(6)))
    assert charpoly(d) == distance_charpoly_formula(6)


def test_distance_formula_rejects_primes_and_small_orders():
    for n in (1, 2, 3, 5, 7, 149):
        with pytest.raises(PrimeOrTrivialN):
            distance_charpoly_formula(n)


def test_adjacency_formula_small_orders():
    assert adjacency_charpoly_formula(2) == IntPolynomial([0, 0, 1])  # x^2
    assert adjacency_charpoly_formula(3) == IntPolynomial([0, -1, 0, 1])  # x^3 - x
    assert adjacency_charpoly_formula(4) == poly_mul(
        IntPolynomial([1, 1]), IntPolynomial([1, -3, -1, 1])
    )
    with pytest.raises(UnsupportedN):
        adjacency_charpoly_formula(1)


def test_prime_adjacency_charpoly():
    assert prime_adjacency_charpoly(2) == IntPolynomial([0, 0, 1])
    expected = poly_mul(
        poly_mul(IntPolynomial([0, 1]), binom_power(3)), IntPolynomial([-3, 1])
    )
    assert prime_adjacency_charpoly(5) == expected
    assert prime_adjacency_charpoly(3) == adjacency_charpoly_formula(3)
    with pytest.raises(NotPrime):
        prime_adjacency_charpoly(6)


def test_prime_corollary_agrees_with_general_formula():
    for p in range(2, 151):
        if is_prime(p):
            assert prime_adjacency_charpoly(p) == adjacency_charpoly_formula(p), p


def test_coefficient_string_round_trip():
    poly = distance_charpoly_formula(60)
    strings = poly.to_coeff_strings()
    assert all(isinstance(s, str) for s in strings)
    assert IntPolynomial.from_coeff_strings(strings) == poly
    assert IntPolynomial([]).to_coeff_strings() == ["0"]


def test_polynomial_str():
    assert str(IntPolynomial([-7, -18, -12, 0, 1])) == "x^4 - 12x^2 - 18x - 7"
    assert str(IntPolynomial([])) == "0"
    assert str(IntPolynomial([1, 1])) == "x + 1"


def test_int_matrix_validation():
    with pytest.raises(ValueError):
        IntMatrix([[1, 2], [3]])
    with pytest.raises(ValueError):
        IntMatrix([[1.5, 0], [0, 1]])
    with pytest.raises(ValueError):
        IntMatrix([])
