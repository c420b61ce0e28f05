from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from heckeq.ring import (
    A, B, ONE, ZERO, Monomial, NotAUnitError, ParamPolynomial, RingMismatchError, parse_monomial,
    ring_add, ring_inv_unit, ring_mul,
)

from strategies import nonzero_fracs, param_polys, small_fracs

a = ParamPolynomial.a()
b = ParamPolynomial.b()
one = ParamPolynomial.const(1)


def test_rational_arithmetic_examples():
    assert ring_add(Fraction(1, 2), Fraction(1, 2)) == 1
    assert ring_add(Fraction(2, 3), Fraction(1, 6)) == Fraction(5, 6)
    assert ring_inv_unit(2) == Fraction(1, 2)


def test_cancellation_to_empty_polynomial():
    s = ring_add(a, a.scale(-1))
    assert s.is_zero() and s.terms == {}


def test_polynomial_products():
    assert ring_mul(a, b) == ParamPolynomial({(1, 1): 1})
    assert ring_mul(a - one, a + one) == ParamPolynomial({(2, 0): 1, (0, 0): -1})
    assert ring_mul(a, a.inverse()) == one


def test_unit_inverse_and_non_units():
    x = ParamPolynomial({(1, 1): -1})
    assert ring_inv_unit(x) == ParamPolynomial({(-1, -1): -1})
    with pytest.raises(NotAUnitError):
        ring_inv_unit(a + one)
    with pytest.raises(NotAUnitError):
        ring_inv_unit(Fraction(0))
    with pytest.raises(NotAUnitError):
        ring_inv_unit(ParamPolynomial())


def test_ring_mismatch():
    with pytest.raises(RingMismatchError):
        ring_add(a, Fraction(1))
    with pytest.raises(RingMismatchError):
        ring_mul(a, ParamPolynomial.a(weights=(2, 3)))


def test_zero_coefficients_dropped_and_fractions_reduced():
    p = ParamPolynomial({(0, 0): Fraction(2, 4), (1, 0): 0})
    assert p.terms == {(0, 0): Fraction(1, 2)}
    c = p.terms[(0, 0)]
    assert (c.numerator, c.denominator) == (1, 2)


def test_weighted_degree():
    p = ParamPolynomial({(1, 2): 1, (-1, 0): 3})
    assert p.min_weight() == -3
    assert p.weight((1, 2)) == 9


@given(param_polys(), param_polys(), param_polys())
def test_ring_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x + y == y + x
    assert (x * y) * z == x * (y * z)
    assert x * y == y * x
    assert x * (y + z) == x * y + x * z


@given(param_polys(), param_polys())
def test_canonical_form_equality(x, y):
    assert (x == y) == (x.terms == y.terms)
    if x == y:
        assert hash(x) == hash(y)


@given(nonzero_fracs, st.integers(-3, 3), st.integers(-3, 3))
def test_units_invert(c, i, j):
    u = ParamPolynomial({(i, j): c})
    assert u * ring_inv_unit(u) == one


@given(small_fracs, st.integers(-4, 4), st.integers(-2, 2), st.integers(-2, 2),
       small_fracs, st.integers(-4, 4), st.integers(-2, 2), st.integers(-2, 2))
def test_monomial_product_and_weight(c1, e1, i1, j1, c2, e2, i2, j2):
    m1, m2 = Monomial(c1, e1, i1, j1), Monomial(c2, e2, i2, j2)
    m = m1 * m2
    assert m.coeff == c1 * c2
    if m.coeff:
        assert m.weight() == m1.weight() + m2.weight()


def test_zero_monomial_is_canonical():
    assert Monomial(0, 5, 1, 1) == ZERO
    assert ZERO.is_zero and not ONE.is_zero
    assert A.weight() == 3 and B.weight() == 3


@pytest.mark.parametrize("text,expected", [
    ("1", Monomial(1)), ("-1", Monomial(-1)), ("0", ZERO), ("q", Monomial(1, 1)),
    ("-q^2", Monomial(-1, 2)), ("q^-1", Monomial(1, -1)), ("1/2*q^3", Monomial(Fraction(1, 2), 3)),
    ("a*b", Monomial(1, 0, 1, 1)),
])
def test_parse_monomial(text, expected):
    assert parse_monomial(text) == expected


def test_parse_monomial_rejects_garbage():
    with pytest.raises(ValueError):
        parse_monomial("")
    with pytest.raises(ValueError):
        parse_monomial("qq")
