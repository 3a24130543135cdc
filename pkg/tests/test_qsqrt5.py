import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from nodalsextic import ONE, SQRT5, TAU, TAUBAR, ZERO, QSqrt5

fractions = st.fractions(min_value=-100, max_value=100, max_denominator=100)
elements = st.builds(QSqrt5, fractions, fractions)


def test_constants():
    assert SQRT5 * SQRT5 == 5
    assert TAU + TAUBAR == 1
    assert TAU * TAUBAR == -1
    assert TAU * TAU == TAU + 1
    assert TAUBAR**3 == 2 - SQRT5


def test_string_forms():
    assert str(QSqrt5(Fraction(-1, 2), Fraction(1, 3))) == "-1/2+1/3*r5"
    assert str(ZERO) == "0"
    assert str(ONE) == "1"
    assert str(SQRT5) == "1*r5"
    assert str(-SQRT5) == "-1*r5"


def test_float_embedding():
    assert math.isclose(float(TAU), (1 + math.sqrt(5)) / 2)
    assert math.isclose(float(QSqrt5(3, -2)), 3 - 2 * math.sqrt(5))


def test_conjugate_and_norm():
    x = QSqrt5(Fraction(2, 3), Fraction(-1, 7))
    assert x.conjugate().conjugate() == x
    n = x * x.conjugate()
    assert n.b == 0


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


def test_immutability():
    with pytest.raises(AttributeError):
        TAU.a = Fraction(0)


def test_coercion():
    assert TAU + 1 == 1 + TAU
    assert Fraction(1, 2) * SQRT5 == SQRT5 / 2
    assert SQRT5 - Fraction(1, 2) == QSqrt5(Fraction(-1, 2), 1)


@given(elements, elements, elements)
def test_ring_axioms(x, y, z):
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + ZERO == x
    assert x * ONE == x
    assert x + (-x) == ZERO


@given(elements)
def test_field_inverse(x):
    if x != ZERO:
        assert x * (ONE / x) == ONE


@given(elements, st.integers(min_value=0, max_value=8))
def test_pow_matches_repeated_product(x, n):
    prod = ONE
    for _ in range(n):
        prod = prod * x
    assert x**n == prod


@given(elements, elements)
def test_conjugation_is_a_homomorphism(x, y):
    assert (x + y).conjugate() == x.conjugate() + y.conjugate()
    assert (x * y).conjugate() == x.conjugate() * y.conjugate()


@given(elements)
def test_hash_consistency(x):
    assert hash(x) == hash(QSqrt5(x.a, x.b))
    if x.b == 0:
        assert x == x.a
