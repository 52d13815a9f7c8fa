from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from antiprism.errors import IntegrityError
from antiprism.poly import IntPolynomial, expand_face_counts, poly

coeff_lists = st.lists(st.integers(-50, 50), max_size=8)


def test_reverse_example():
    assert poly([1, 2]).reverse(2) == poly([0, 2, 1])


def test_square():
    assert poly([1, 1]) * poly([1, 1]) == poly([1, 2, 1])


def test_reverse_below_degree_rejected():
    with pytest.raises(ValueError):
        poly([1, 2, 3]).reverse(1)


def test_zero_polynomial_conventions():
    z = IntPolynomial()
    assert z.degree == -1
    assert z.is_zero()
    assert str(z) == "0"
    assert z.reverse(3).is_zero()


def test_trailing_zeros_trimmed_and_nominal_ignored_by_equality():
    p = IntPolynomial([1, 2, 0, 0], nominal_degree=5)
    assert p.coeffs == (1, 2)
    assert p == poly([1, 2])
    assert p.reverse() == poly([0, 0, 0, 0, 2, 1])


def test_nominal_degree_below_degree_rejected():
    with pytest.raises(ValueError):
        IntPolynomial([1, 2, 3], nominal_degree=1)


def test_str_form():
    assert str(poly([1, 9, 3])) == "1 + 9x + 3x^2"
    assert str(poly([0, -1, 0, 2])) == "-x + 2x^3"


def test_shift_negative_requires_divisibility():
    assert poly([0, 0, 1, 2]).shift(-2) == poly([1, 2])
    with pytest.raises(IntegrityError):
        poly([1, 1]).shift(-1)


def test_divide_by_linear():
    assert (poly([1, 1]) * poly([-1, 1])).divide_by_linear(1) == poly([1, 1])
    with pytest.raises(IntegrityError):
        poly([1, 1]).divide_by_linear(1)


def test_sign_at_rational():
    p = poly([-1, 0, 4])  # roots at +-1/2
    assert p.sign_at(Fraction(1, 2)) == 0
    assert p.sign_at(Fraction(1, 3)) == -1
    assert p.sign_at(Fraction(-3, 4)) == 1


def test_expand_face_counts_simplex():
    # faces of a triangle: 1, 3, 3, 1 -> h = 1
    assert expand_face_counts([1, 3, 3, 1], 3) == poly([1])


@given(coeff_lists, st.integers(0, 4))
def test_reverse_involution(cs, extra):
    p = poly(cs)
    n = max(p.degree, 0) + extra
    assert p.reverse(n).reverse(n) == p


@given(coeff_lists, coeff_lists, coeff_lists)
def test_ring_laws(a, b, c):
    p, q, r = poly(a), poly(b), poly(c)
    assert p * (q + r) == p * q + p * r
    assert (p * q) * r == p * (q * r)
    assert p - p == IntPolynomial()


@given(coeff_lists, st.integers(-5, 5))
def test_evaluation_is_homomorphic(cs, x):
    p = poly(cs)
    assert (p * p)(x) == p(x) ** 2
    assert p.derivative() == poly([i * c for i, c in enumerate(cs)][1:])
