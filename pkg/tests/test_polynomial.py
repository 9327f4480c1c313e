import pytest
from hypothesis import given
from hypothesis import strategies as st

from schrome.errors import InvalidInput
from schrome.polynomial import FallingFactorialForm, IntPolynomial, evaluate, to_power_basis

coeff_lists = st.lists(st.integers(-50, 50), max_size=7)


def test_trailing_zeros_trimmed():
    assert IntPolynomial((1, 2, 0, 0)).coeffs == (1, 2)
    assert IntPolynomial().degree == -1
    assert str(IntPolynomial()) == "0"


def test_format():
    p = IntPolynomial((0, -1, 5, -5, 0, 1))
    assert str(p) == "r^5 - 5r^3 + 5r^2 - r"
    assert str(IntPolynomial((3,))) == "3"
    assert str(IntPolynomial((-2, 1))) == "r - 2"


def test_falling_factorial():
    assert IntPolynomial.falling_factorial(3) == IntPolynomial((0, 2, -3, 1))
    assert IntPolynomial.falling_factorial(0) == IntPolynomial.constant(1)


@given(coeff_lists, coeff_lists, st.integers(-6, 6))
def test_ring_ops_agree_with_evaluation(a, b, r):
    p, q = IntPolynomial(a), IntPolynomial(b)
    assert (p + q)(r) == p(r) + q(r)
    assert (p - q)(r) == p(r) - q(r)
    assert (p * q)(r) == p(r) * q(r)
    assert (p * 3)(r) == 3 * p(r)


@given(coeff_lists)
def test_falling_roundtrip(a):
    p = IntPolynomial(a)
    assert p.to_falling().to_power_basis() == p


def test_divide_by_r():
    assert IntPolynomial((0, 2, 1)).divide_by_r() == IntPolynomial((2, 1))
    with pytest.raises(InvalidInput):
        IntPolynomial((1, 1)).divide_by_r()


def test_falling_form_mb():
    ff = FallingFactorialForm({2: 5, 3: 20, 4: 10, 5: 1})
    assert to_power_basis(ff) == IntPolynomial((0, -1, 5, -5, 0, 1))
    assert str(ff) == "5[r]_2 + 20[r]_3 + 10[r]_4 + [r]_5"
    assert ff.min_index == 2 and ff.max_index == 5
    for r in range(6):
        assert evaluate(ff, r) == evaluate(to_power_basis(ff), r)


def test_falling_form_drops_zeros():
    ff = FallingFactorialForm({0: 0, 1: 0, 2: 3, 3: 0, 4: 1})
    assert ff.min_index == 2
    assert ff.support() == [3, 0, 1]  # coefficients from min to max index


def test_big_integers_exact():
    p = IntPolynomial.falling_factorial(30)
    assert p(40) == 40 * 39 * 38 * 37 * 36 * 35 * 34 * 33 * 32 * 31 * 30 * 29 * 28 * 27 * 26 * 25 * 24 * 23 * 22 * 21 * 20 * 19 * 18 * 17 * 16 * 15 * 14 * 13 * 12 * 11
