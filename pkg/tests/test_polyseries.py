from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from garside_growth._kronecker import mul_truncated, schoolbook
from garside_growth.polyseries import (
    CoeffStream,
    IntPolynomial,
    NEG_INF,
    PolyMatrix,
    bareiss_determinant,
    cofactor_determinant,
    determinant,
    eval_fraction,
    format_decimal,
    format_polynomial,
    invert_series,
    parse_polynomial,
    poly_mul,
    series_mul_truncated,
)

P = IntPolynomial
t = P([0, 1])

small_polys = st.lists(st.integers(-50, 50), max_size=13).map(P)


def test_trim_and_degree():
    assert P([1, 2, 0, 0]).coeffs == (1, 2)
    assert P().degree == NEG_INF
    assert P([0, 0]) == P()
    assert P([5]).degree == 0


def test_mul_examples():
    assert poly_mul(P([1, -2]), P([1, 1])) == P([1, -1, -2])
    assert P([3, 1]) * P() == P()
    assert P([1, -1]) * P([1, 1, 1, 1]) == P([1, 0, 0, 0, -1])


def test_int_interop():
    assert 1 - t == P([1, -1])
    assert 2 * t == P([0, 2])
    assert P([4]) == 4
    assert (1 - t) ** 3 == P([1, -3, 3, -1])


@given(small_polys, small_polys, small_polys)
@settings(max_examples=60, deadline=None)
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a
    assert a - a == P()


@given(small_polys, small_polys.filter(bool))
@settings(max_examples=60, deadline=None)
def test_exact_div_inverts_mul(a, b):
    assert (a * b).exact_div(b) == a


def test_exact_div_inexact():
    with pytest.raises(ArithmeticError):
        P([1, 1, 1]).exact_div(P([1, 1]))
    with pytest.raises(ZeroDivisionError):
        P([1]).exact_div(P())


@pytest.mark.parametrize("text, coeffs", [
    ("1 - 2*t + t^3", [1, -2, 0, 1]),
    ("1-3t+t^2+t^{15}", [1, -3, 1] + [0] * 12 + [1]),
    ("2t^6-t^{12}", [0] * 6 + [2] + [0] * 5 + [-1]),
    ("-t", [0, -1]),
    ("0", []),
    ("7", [7]),
])
def test_parse(text, coeffs):
    assert parse_polynomial(text) == P(coeffs)


@pytest.mark.parametrize("text", ["", "1 2", "t + x", "1 + ", "t^"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        parse_polynomial(text)


def test_format():
    assert format_polynomial(P([1, -2, 0, 1])) == "1 - 2*t + t^3"
    assert format_polynomial(P([0, -1, 3])) == "-t + 3*t^2"
    assert format_polynomial(P()) == "0"


@given(small_polys)
def test_format_parse_round_trip(a):
    assert parse_polynomial(format_polynomial(a)) == a


def test_determinant_examples():
    assert determinant(PolyMatrix([[1, t], [1, 1]])) == 1 - t
    ident = [[1 if i == j else 0 for j in range(5)] for i in range(5)]
    assert determinant(PolyMatrix(ident)) == 1
    m = PolyMatrix([[1, t, t ** 3], [1, 1, t], [0, 1, 1]])
    assert determinant(m) == P([1, -2, 0, 1])
    assert determinant(PolyMatrix([[t + 2]])) == t + 2


def test_bareiss_needs_pivot_swap():
    m = PolyMatrix([[0, 1, t], [1, 0, 0], [t, 1, 1]])
    assert bareiss_determinant(m) == cofactor_determinant(m)


def test_singular_matrix():
    m = PolyMatrix([[1, t, 0], [1, t, 0], [0, 1, 1]])
    assert bareiss_determinant(m) == P()


poly_entries = st.lists(st.integers(-3, 3), max_size=4).map(P)


@given(st.lists(poly_entries, min_size=16, max_size=16))
@settings(max_examples=40, deadline=None)
def test_bareiss_matches_cofactor(entries):
    m = PolyMatrix([entries[4 * i:4 * i + 4] for i in range(4)])
    assert bareiss_determinant(m) == cofactor_determinant(m)


def test_matrix_must_be_square():
    with pytest.raises(ValueError):
        PolyMatrix([[1, 2], [3]])


@pytest.mark.parametrize("poly, K, expected", [
    (P([1, -2, 0, 1]), 6, [1, 2, 4, 7, 12, 20, 33]),
    (P([1, -1]), 4, [1, 1, 1, 1, 1]),
    (P([1, -2, 0, 0, 1]), 5, [1, 2, 4, 8, 15, 28]),
])
def test_invert_series(poly, K, expected):
    assert invert_series(poly, K).coefficients(K) == expected


def test_invert_series_bad_constant():
    with pytest.raises(ValueError):
        invert_series(P([2, 1]), 3)


def test_stream_extension_is_stable():
    s = CoeffStream(P([1, -3, 1, 2, 0, 0, -1]))
    first = s.coefficients(10)
    more = s.coefficients(30)
    assert more[:11] == first
    assert s[-1] == 0
    assert len(s) == 31


@given(st.lists(st.integers(-20, 20), max_size=8).map(lambda c: P([1] + c)), st.integers(0, 40))
@settings(max_examples=50, deadline=None)
def test_inverse_times_poly_is_one(poly, K):
    alpha = invert_series(poly, K).coefficients(K)
    prod = series_mul_truncated(alpha, list(poly.coeffs), K)
    assert prod == [1] + [0] * K


def test_series_mul_truncated():
    assert series_mul_truncated([1, 1, 2], [1], 2) == [1, 1, 2]
    assert series_mul_truncated([1, 1], [1, 1], 2) == [1, 2, 1]
    assert series_mul_truncated([1, 1, 2, 4], [1, 1, 2, 4], 3) == [1, 2, 5, 12]


big = st.integers(-(10**40), 10**40)


@given(st.lists(big, min_size=1, max_size=120), st.lists(big, min_size=1, max_size=120),
       st.integers(1, 250))
@settings(max_examples=60, deadline=None)
def test_kronecker_matches_schoolbook(a, b, n):
    assert mul_truncated(a, b, n) == schoolbook(a, b, n)


def test_kronecker_sparse_head_and_growth():
    # long zero head with a huge tail: slot width must follow the inputs
    a = [0] * 60 + [10**200, -(10**150)] + [3] * 40
    b = [(-1) ** k * 7**k for k in range(100)]
    assert mul_truncated(a, b, 180) == schoolbook(a, b, 180)


def test_eval_fraction():
    p = P([1, -2, 0, 1])
    assert eval_fraction(p, Fraction(1, 2)) == Fraction(1, 8)
    assert eval_fraction(p, Fraction(1)) == 0


@pytest.mark.parametrize("x, digits, text", [
    (Fraction(133, 52), 4, "2.5577"),
    (Fraction(2), 1, "2.0"),
    (Fraction(-1, 3), 3, "-0.333"),
    (Fraction(2, 3), 0, "1"),
    (Fraction(1, 8), 2, "0.13"),
])
def test_format_decimal(x, digits, text):
    assert format_decimal(x, digits) == text
