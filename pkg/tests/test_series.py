from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from heckeq.ring import ONE, ZERO, Monomial, NotAUnitError
from heckeq.series import (
    OutOfOrderError, PochhammerArg, SpecializationError, TruncatedSeries, WeightMismatchError,
    coefficient, inverse_pochhammer, pochhammer, series_add, series_invert, series_mul,
    shifted_pochhammer_poly,
)

from strategies import param_series, uni_series

Q = Monomial(1, 1)
A = Monomial(1, 0, 1, 0)


def euler(order):
    return pochhammer(PochhammerArg(ONE, 1, 1), order)


def poly(coeffs, order):
    return TruncatedSeries.from_coeffs(coeffs, order)


def schoolbook(x, y, n):
    """Plain list convolution, truncated to n terms."""
    out = [0] * n
    for i, u in enumerate(x[:n]):
        for j, v in enumerate(y[: n - i]):
            out[i + j] += u * v
    return out


def brute_euler(n):
    """prod_{k=1}^{n-1} (1 - q^k) by repeated list multiplication."""
    c = [1] + [0] * (n - 1)
    for k in range(1, n):
        c = [c[i] - (c[i - k] if i >= k else 0) for i in range(n)]
    return c


def count_partitions(n):
    def rec(m, largest):
        if m == 0:
            return 1
        return sum(rec(m - k, k) for k in range(1, min(m, largest) + 1))
    return rec(n, n)


def test_geometric_telescoping():
    geom = poly([1] * 10, 10)
    assert series_mul(poly([1, -1], 10), geom) == TruncatedSeries.one(10)


def test_difference_of_squares():
    assert poly([1, 1], 8) * poly([1, -1], 8) == poly([1, 0, -1], 8)


def test_euler_square_matches_schoolbook():
    e = euler(8)
    oracle = schoolbook(brute_euler(8), brute_euler(8), 8)
    assert (e * e).coeffs() == oracle
    assert oracle[:7] == [1, -2, -1, 2, 1, 2, -2]


def test_euler_product_and_pentagonal_support():
    assert euler(8).coeffs() == [1, -1, -1, 0, 0, 1, 0, 1]
    n = 400
    pent = set()
    for k in range(-20, 21):
        pent.add(k * (3 * k - 1) // 2)
    cs = euler(n).coeffs()
    assert {e for e, c in enumerate(cs) if c} == {p for p in pent if p < n}
    assert set(cs) <= {-1, 0, 1}


def test_finite_pochhammers():
    assert pochhammer(PochhammerArg(A, 0, 1, 0), 10) == TruncatedSeries.one(10)
    got = pochhammer(PochhammerArg(Monomial(-1), 0, 2, 2), 10)
    assert got.coeffs() == [2, 0, 2] + [0] * 7


def test_invert_examples():
    assert series_invert(poly([1, -1], 10)) == poly([1] * 10, 10)
    assert series_invert(euler(30)).coeffs() == [count_partitions(n) for n in range(30)]
    got = series_invert(poly([2, 1], 6)).coeffs()
    assert got == [Fraction((-1) ** k, 2 ** (k + 1)) for k in range(6)]


def test_invert_non_unit():
    a_plus_one = TruncatedSeries.from_terms({(0, 0, 0): 1, (0, 1, 0): 1}, 10)
    # lowest weight part 1 is a unit even though a appears; 1 + a inverts by Newton steps
    inv = a_plus_one.invert()
    assert (inv * a_plus_one).truncate(10) == TruncatedSeries.one(10, parametric=True)
    two_lowest = TruncatedSeries.from_terms({(3, 0, 0): 1, (0, 1, 0): 1}, 10)
    with pytest.raises(NotAUnitError):
        two_lowest.invert()


def test_coefficient_examples():
    e = euler(10)
    assert coefficient(e * e * e, 1) == -3
    assert coefficient(series_invert(e), 5) == 7
    with pytest.raises(OutOfOrderError):
        coefficient(e, 10)


def test_shifted_pochhammer_examples():
    assert shifted_pochhammer_poly(A, 2, 2, 0, 12) == TruncatedSeries.one(12, parametric=True)
    expected = TruncatedSeries.from_terms({(0, 1, 0): 1, (2, 0, 0): -1}, 12)
    # an exact polynomial; the product may carry a larger known order
    assert shifted_pochhammer_poly(A, 2, 2, 1, 12).truncate(12) == expected
    assert shifted_pochhammer_poly(ZERO, 2, 2, 2, 12).truncate(12) == TruncatedSeries.monomial(Monomial(1, 6), 12)


def test_specialize_examples():
    s = TruncatedSeries.from_terms({(1, 1, 0): 1, (0, 0, 1): 1}, 30)
    assert s.specialize(ONE, Monomial(-1, 1), order=10).is_zero()
    s = TruncatedSeries.from_terms({(0, 1, 0): 1, (2, 0, 0): -1}, 30)
    got = s.specialize(Monomial(1, -1), ONE, order=10)
    assert got.floor == -1
    assert list(got.terms()) == [(-1, 0, 0, 1), (2, 0, 0, -1)]


def test_specialize_zero_into_negative_degree():
    s = TruncatedSeries.from_terms({(3, -1, 0): 1}, 30)
    with pytest.raises(SpecializationError):
        s.specialize(ZERO, ONE, order=5)


def test_certified_specialization_of_parameterized_theorem():
    from heckeq.identities.engine import check_symbolic_specialization

    [(order, lhs_mm, rhs_mm)] = check_symbolic_specialization("sp-7-15-q-mq", 40)
    assert order >= 12
    assert lhs_mm is None and rhs_mm is None


def test_weight_mismatch():
    with pytest.raises(WeightMismatchError):
        TruncatedSeries.one(10) + TruncatedSeries.one(10, weights=(1, 2, 2))


def test_result_order_is_min():
    assert series_add(TruncatedSeries.one(10), TruncatedSeries.one(7)).order == 7


@given(uni_series(order=12, unit=True))
def test_invert_roundtrip(s):
    one = (s * s.invert()).truncate(s.order)
    assert one == TruncatedSeries.one(s.order)


@given(uni_series(order=10, lo=-2, unit=True), uni_series(order=10, lo=-1, unit=True))
def test_product_floor(s, t):
    assert (s * t).floor == s.floor + t.floor


@given(param_series(), param_series(),
       st.sampled_from([Monomial(1, 1), Monomial(-1, 1), Monomial(2, 2), ZERO]),
       st.sampled_from([Monomial(1, 1), Monomial(-1, 2), ZERO]))
def test_specialize_is_a_homomorphism(s, t, sa, sb):
    order = min(s.safe_specialization_order(sa, sb), t.safe_specialization_order(sa, sb))
    lhs = (s + t).specialize(sa, sb, order)
    assert lhs == series_add(s.specialize(sa, sb, order), t.specialize(sa, sb, order))
    prod = (s * t)
    order = min(order, prod.safe_specialization_order(sa, sb))
    assert prod.specialize(sa, sb, order) == (s.specialize(sa, sb, order) *
                                               t.specialize(sa, sb, order)).truncate(order)


@given(st.integers(5, 40), st.integers(1, 30))
def test_truncation_consistency(w1, extra):
    w2 = w1 + extra
    arg = PochhammerArg(A, 1, 1)
    assert pochhammer(arg, w2).truncate(w1) == pochhammer(arg, w1)
    assert inverse_pochhammer(arg, w2).truncate(w1) == inverse_pochhammer(arg, w1)


def test_negate_and_dilate():
    e = euler(20)
    assert e.negate_q().coeffs()[:4] == [1, 1, -1, 0]
    d = e.dilate_q(2)
    assert d.coeffs(0, 8) == [1, 0, -1, 0, -1, 0, 0, 0]
