from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from heckeq.hypergeom import (
    BinomialFactor, DivergentSpecError, FinitePhiSpec, NonIntegerExponentError, RationalQ, TermPoch,
    TermSumSpec, build_term_sum, finite_phi, finite_phi_terms, phi_spec, rq_poch, theta_partial,
)
from heckeq.identities import finite
from heckeq.ring import ONE, Monomial
from heckeq.series import PochhammerArg, PoleError, TruncatedSeries, inverse_pochhammer, pochhammer

from strategies import small_fracs


def qm(k=1, c=1):
    return Monomial(c, k)


def odd_divisor_excess(m):
    return sum((1 if d % 4 == 1 else -1) for d in range(1, m + 1) if m % d == 0 and d % 2)


LAMBERT = TermSumSpec(start=1, qexp=(0, 1, 0), factors=(BinomialFactor(qm(0, -1), 2, -1),))


def test_lambert_sum_matches_divisor_oracle():
    got = build_term_sum(LAMBERT, 60).coeffs()
    assert got == [0] + [odd_divisor_excess(m) for m in range(1, 60)]
    # low coefficients: q + q^2 + 0 q^3 + q^4 + 2 q^5
    assert build_term_sum(LAMBERT, 6).coeffs() == [0, 1, 1, 0, 1, 2]


def test_geometric_series():
    s = build_term_sum(TermSumSpec(qexp=(0, 1, 0)), 15)
    assert s.coeffs() == [1] * 15


def brute_q_series(term, nmax, order):
    """Sum of term(n) for n <= nmax, each a list of coefficients, truncated."""
    out = [0] * order
    for n in range(nmax + 1):
        for e, c in enumerate(term(n, order)):
            out[e] += c
    return out


def test_rogers_sum_matches_term_by_term_expansion():
    # sum q^(n^2) / (q^2; q^2)_n, each 1/(1-q^(2k)) expanded as a geometric list
    def term(n, order):
        cs = [0] * order
        if n * n < order:
            cs[n * n] = 1
        for k in range(1, n + 1):
            for e in range(2 * k, order):
                cs[e] += cs[e - 2 * k]
        return cs

    spec = TermSumSpec(qexp=(1, 0, 0), denominators=(TermPoch(ONE, 2, 2),))
    got = build_term_sum(spec, 10).coeffs()
    assert got == brute_q_series(term, 4, 10)
    assert got == [1, 1, 0, 1, 1, 1, 1, 1, 2, 2]


def test_q_binomial_theorem_through_phi_spec():
    # 1-phi-0(-q; ; q) = (-q^2; q)_inf / (q; q)_inf
    s = build_term_sum(phi_spec([qm(1, -1)], [], qm(1)), 40)
    rhs = pochhammer(PochhammerArg(qm(2, -1), 0, 1), 40) * inverse_pochhammer(PochhammerArg(ONE, 1, 1), 40)
    assert s == rhs


def test_divergent_spec_rejected():
    with pytest.raises(DivergentSpecError):
        build_term_sum(TermSumSpec(qexp=(0, 0, 0)), 10)


def test_non_integer_exponent_rejected():
    with pytest.raises(NonIntegerExponentError):
        build_term_sum(TermSumSpec(qexp=(Fraction(1, 2), 0, 0)), 10)


def test_finite_phi_examples():
    lhs, rhs = finite.eq_1_6(0)
    assert lhs == rhs == RationalQ.monomial(1)
    lhs, rhs = finite.eq_1_6(1)
    assert lhs == RationalQ({0: 1, 1: 2})
    lhs, rhs = finite.eq_7_10(2)
    assert lhs == rhs == RationalQ({0: 1, 1: 1, 3: 1, 6: 1, 10: 1})


def test_finite_phi_has_n_plus_one_terms():
    for n in range(6):
        spec = FinitePhiSpec(n, (qm(-n), qm(1, -1)), (qm(2),), qm(1))
        assert len(finite_phi_terms(spec)) == n + 1
        # one extra term of the untruncated series vanishes
        longer = FinitePhiSpec(n + 1, (qm(-n), qm(1, -1)), (qm(2),), qm(1))
        assert finite_phi(longer) == finite_phi(spec)


@pytest.mark.parametrize("name", ["eq_1_6", "eq_1_7", "eq_7_14", "eq_7_2", "eq_7_4", "eq_7_6",
                                  "eq_7_7", "eq_7_8", "eq_7_10", "eq_9_1", "eq_9_3"])
def test_finite_lemmas_small_n(name):
    f = getattr(finite, name)
    for n in range(6):
        lhs, rhs = f(n)
        assert lhs == rhs, (name, n)


def test_contiguous_relations_small_n():
    from heckeq.identities.registry import ABDE_SAMPLES

    for p in ABDE_SAMPLES:
        for n in range(5):
            for f in (finite.eq_1_1, finite.eq_7_1):
                lhs, rhs = f(n, p)
                assert lhs == rhs


def test_finite_value_embeds_as_series():
    lhs, _ = finite.eq_1_6(3)
    s = lhs.series(30)
    assert s == TruncatedSeries.from_terms({(j * j, 0, 0): (1 if j == 0 else 2) for j in range(4)}, 30)


@st.composite
def rationals(draw):
    num = {draw(st.integers(-3, 5)): draw(small_fracs) for _ in range(draw(st.integers(0, 4)))}
    r = RationalQ(num)
    for _ in range(draw(st.integers(0, 2))):
        r = r.div_binomial(Monomial(draw(st.sampled_from([1, -1, 2])), draw(st.integers(1, 3))))
    return r


@given(rationals(), rationals())
def test_rational_functions_embed_homomorphically(x, y):
    lo = min(v for v in (x.valuation(), y.valuation(), 0) if v is not None)
    order = 20
    assert (x + y).series(order) == x.series(order) + y.series(order)
    if lo >= 0:
        assert (x * y).series(order) == (x.series(order) * y.series(order)).truncate(order)


@given(rationals(), st.integers(1, 3), st.sampled_from([1, -1, 3]))
def test_binomial_division_roundtrip(x, k, c):
    m = Monomial(c, k)
    assert x.div_binomial(m).mul_binomial(m) == x


def test_pole_guard():
    with pytest.raises(PoleError):
        RationalQ.monomial(1).div_binomial(ONE)
    assert rq_poch(qm(1), 1, 2) == RationalQ({0: 1, 1: -1, 2: -1, 3: 1})


def test_theta_partial():
    assert theta_partial(-2, 2) == RationalQ({0: 1, 1: 2, 4: 2})


@given(st.permutations([qm(1, -1), qm(2, 3), qm(1, Fraction(1, 2))]))
def test_factor_order_is_irrelevant(nums):
    spec = TermSumSpec(qexp=(1, 0, 0), numerators=tuple(TermPoch(x, 0, 1) for x in nums),
                       denominators=(TermPoch(ONE, 1, 1),))
    ref = TermSumSpec(qexp=(1, 0, 0), numerators=tuple(TermPoch(x, 0, 1) for x in
                                                       [qm(1, -1), qm(2, 3), qm(1, Fraction(1, 2))]),
                      denominators=(TermPoch(ONE, 1, 1),))
    assert build_term_sum(spec, 25) == build_term_sum(ref, 25)
