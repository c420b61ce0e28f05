from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from heckeq.hecke import HeckeSpec, Kind, NonIntegerExponentError, Region, build_hecke, theta_sum
from heckeq.partitions import lambert_series, two_squares_count
from heckeq.series import NonTerminatingError, TruncatedSeries

HALF = Fraction(1, 2)


def brute(exponent, region_rows, order, sign=lambda n, j: 1):
    """Dictionary of exponent -> coefficient from an explicit double loop."""
    acc = {}
    for n, js in region_rows:
        for j in js:
            e = exponent(n, j)
            if e < order:
                acc[e] = acc.get(e, 0) + sign(n, j)
    return [acc.get(e, 0) for e in range(order)]


def test_shifted_region_example():
    spec = HeckeSpec((1, 0, 1, 0, 0, 0), Region.J_SHIFT, n_start=1)
    rows = [(n, range(-n + 1, n + 1)) for n in range(1, 4)]
    oracle = brute(lambda n, j: n * n + j * j, rows, 6)
    assert build_hecke(spec, 6).coeffs() == oracle == [0, 1, 1, 0, 1, 2]


def test_jacobi_region_example():
    spec = HeckeSpec((HALF, 0, 0, HALF, 0, 0), Region.JACOBI, sign=(1, 0))
    rows = [(m, range(-m, m + 1)) for m in range(0, 6)]
    oracle = brute(lambda m, n: m * (m + 1) // 2, rows, 7, sign=lambda m, n: (-1) ** m)
    assert build_hecke(spec, 7).coeffs() == oracle == [1, -3, 0, 5, 0, 0, -7]


def test_empty_sum():
    spec = HeckeSpec((1, 0, 1, 0, 0, 0), Region.J_FULL, n_start=10)
    assert build_hecke(spec, 20).is_zero()


@pytest.mark.parametrize("kind,c,order,expected", [
    (Kind.SQUARE, 2, 9, {0: 1, 2: 2, 8: 2}),
    (Kind.TRIANGULAR, 1, 13, {0: 1, 4: 1, 12: 1}),
    (Kind.SQUARE, 1, 5, {0: 1, 1: 2, 4: 2}),
])
def test_theta_examples(kind, c, order, expected):
    got = theta_sum(kind, order, c)
    assert got == TruncatedSeries.from_terms({(e, 0, 0): v for e, v in expected.items()}, order)


def test_guards():
    with pytest.raises(NonTerminatingError):
        build_hecke(HeckeSpec((-1, 0, 1, 0, 0, 0)), 10)
    with pytest.raises(NonTerminatingError):
        build_hecke(HeckeSpec((0, 0, 0, 0, 0, 0)), 10)
    with pytest.raises(NonIntegerExponentError):
        build_hecke(HeckeSpec((HALF, 0, 1, 0, 0, 0)), 10)
    with pytest.raises(ValueError):
        theta_sum(Kind.SQUARE, 10, 0)


def test_rogers_region_bounds():
    assert Region.ROGERS.bounds(5) == (-2, 2)
    assert Region.J_PLUS.bounds(2) == (-2, 3)


@given(st.integers(1, 3), st.integers(1, 3), st.integers(0, 3), st.integers(0, 2),
       st.integers(0, 1), st.sampled_from([(), ((1, 2, 1),), ((-1, 1, 0),)]))
def test_fold_symmetry(A, C, D, F, sn, factors):
    order = 60
    spec = HeckeSpec((A, 0, C, D, 0, F), Region.J_FULL, sign=(sn, 0), factors=factors)
    full = build_hecke(spec, order)
    acc = {}
    for n in range(0, 40):
        for j in range(0, n + 1):
            e0 = A * n * n + C * j * j + D * n + F
            mult = 1 if j == 0 else 2
            sgn = (-1) ** (sn * n)
            shifts = [(1, 0)]
            for s, c, d in factors:
                shifts += [(k * s, off + c * n + d) for k, off in shifts]
            for k, off in shifts:
                if e0 + off < order:
                    acc[e0 + off] = acc.get(e0 + off, 0) + mult * sgn * k
    folded = TruncatedSeries.from_terms({(e, 0, 0): v for e, v in acc.items() if v}, order)
    assert full == folded


def test_two_squares_cross_check():
    order = 300
    theta2 = theta_sum(Kind.SQUARE, order) * theta_sum(Kind.SQUARE, order)
    lam = lambert_series(order).scale(4) + TruncatedSeries.one(order)
    assert theta2 == lam
    assert theta2.int_coeffs() == [two_squares_count(m) for m in range(order)]


def test_lemma_l1_to_order_500():
    from heckeq.identities.engine import verify

    assert verify("lem-l1", 500).ok
