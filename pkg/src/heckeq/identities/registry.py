"""The compiled-in identity registry.

Each record pairs two builders (or, for terminating lemmas and sampled
transformations, an exact pair function).  Summand conventions are those of
:class:`~heckeq.hypergeom.TermSumSpec` and :class:`~heckeq.hecke.HeckeSpec`;
``S(x)`` below is ``(q^2/x; q^2)_n x^n`` written as a shifted product, which
keeps every parameterized summand polynomial in ``a`` and ``b``.
"""

from __future__ import annotations

from fractions import Fraction

from ..hecke import HeckeSpec, Kind, Region
from ..hypergeom import BinomialFactor, InnerSum, ShiftedFactor, TermPoch, TermSumSpec
from ..ring import A, B, ONE, ZERO, Monomial
from . import finite
from .builders import Builder, Hecke, Mono, NegQ, Power, Sum, Theta, as_builder, poch
from .records import IdentityRecord, Link, Mode

F = Fraction
HALF = F(1, 2)


def qm(k=1, c=1) -> Monomial:
    return Monomial(F(c), k)


def _m(x) -> Monomial:
    return x if isinstance(x, Monomial) else Monomial(F(x))


def P(x, start=0, step=1, count=(1, 0)) -> TermPoch:
    return TermPoch(_m(x), start, step, count)


def BF(m, c, power=1) -> BinomialFactor:
    return BinomialFactor(_m(m), c, power)


def S2(x) -> ShiftedFactor:
    return ShiftedFactor(_m(x), 2, 2)


def S1(x) -> ShiftedFactor:
    return ShiftedFactor(_m(x), 1, 1)


J_FULL = InnerSum((-1, 0), (1, 0), (1, 0), 0)


def inner(hi=(1, 0), quad=(1, 0), sign=0) -> InnerSum:
    return InnerSum((-1, 0), hi, quad, sign)


def tsum(start=0, nums=(), dens=(), shifted=(), sign=0, qexp=(0, 0, 0), factors=(),
         inner=None) -> Sum:
    return Sum(TermSumSpec(start=start, numerators=tuple(nums), denominators=tuple(dens),
                           shifted=tuple(shifted), sign=sign, qexp=tuple(F(c) for c in qexp),
                           factors=tuple(factors), inner=inner))


def hk(quad, region=Region.J_FULL, sign=(0, 0), factors=(), n_start=0) -> Hecke:
    return Hecke(HeckeSpec(tuple(F(c) for c in quad), region, n_start, sign, tuple(factors)))


# frequently used infinite products
def inv_q2q2():
    return poch((1, 2, 2, -1))


def ratio(x, start, step):
    """``(x q^start; q^step)_inf / (q^2; q^2)_inf``."""
    return poch((x, start, step), (1, 2, 2, -1))


def pod_gf():
    return ratio(-1, 1, 2)


def pbar2_gf():
    return ratio(-1, 2, 2)


def pbar_gf():
    return poch((-1, 1, 1), (1, 1, 1, -1))


def p_gf():
    return poch((1, 1, 1, -1))


# -- parameterized theorems ---------------------------------------------------

AB = A * B


def _pref(lo_ab=0, den_start=2, base=2):
    """``(q^base, ab q^lo_ab; q^base)_inf / (a q^den_start, b q^den_start; q^base)_inf``."""
    return poch((1, base, base), (AB, lo_ab, base), (A, den_start, base, -1),
                (B, den_start, base, -1))


def _ab_dens(start=2, step=2):
    return (P(A, start, step), P(B, start, step))


PARAMETERIZED = {
    "thm-7-15": (
        "weighted 3-phi-2 with (-1; q^2)_n equals a definite double sum over n^2 - n + j^2",
        _pref() * tsum(nums=[P(-1, 0, 2)], dens=[P(1, 2, 2), P(1, 1, 2), P(-1, 2, 2)],
                       shifted=[S2(A), S2(B)]),
        tsum(shifted=[S2(A), S2(B)], dens=_ab_dens(), factors=[BF(qm(2), 4)],
             qexp=(1, -1, 0), inner=J_FULL),
    ),
    "thm-7-13": (
        "3-phi-2 over (q^2, -q^2, q^3) with numerator q and argument ab",
        _pref() * tsum(nums=[P(1, 1, 2)], dens=[P(1, 2, 2), P(-1, 2, 2), P(1, 3, 2)],
                       shifted=[S2(A), S2(B)]),
        tsum(shifted=[S2(A), S2(B)], dens=_ab_dens(), sign=1, qexp=(1, 0, 0),
             factors=[BF(qm(1), 0), BF(qm(1, -1), 2)], inner=J_FULL),
    ),
    "thm-2-2": (
        "3-phi-2 with numerator -q and argument ab/q^2",
        _pref() * tsum(nums=[P(-1, 1, 2)], dens=[P(1, 2, 2), P(1, 1, 2), P(-1, 2, 2)],
                       shifted=[S2(A), S2(B)], qexp=(0, -2, 0)),
        tsum(shifted=[S2(A), S2(B)], dens=_ab_dens(), factors=[BF(qm(2), 4)],
             qexp=(0, -2, 0), inner=J_FULL),
    ),
    "thm-7-3": (
        "sum over 1/(-q; q)_{2n+1} with argument ab/q; alternating inner sum",
        _pref() * tsum(dens=[P(-1, 1, 1, (2, 1))], shifted=[S2(A), S2(B)], qexp=(0, -1, 0)),
        tsum(shifted=[S2(A), S2(B)], dens=_ab_dens(), factors=[BF(qm(1), 2)],
             qexp=(0, -1, 0), inner=inner(sign=1)),
    ),
    "thm-9-2": (
        "3-phi-2 over (q^2, -q^2, q^3) with numerator -q; inner range j = -n..n+1",
        _pref(lo_ab=2, den_start=4) * tsum(nums=[P(-1, 1, 2)],
                                           dens=[P(1, 2, 2), P(-1, 2, 2), P(1, 3, 2)],
                                           shifted=[S2(A), S2(B)]),
        tsum(shifted=[S2(A), S2(B)], dens=_ab_dens(4, 2), factors=[BF(qm(1), 0), BF(qm(4), 4)],
             inner=inner(hi=(1, 1))),
    ),
    "thm-9-4": (
        "3-phi-2 over (q^2, -q^2, q^3) with numerator q and argument ab q^2",
        _pref(lo_ab=2, den_start=4) * tsum(nums=[P(1, 1, 2)],
                                           dens=[P(1, 2, 2), P(-1, 2, 2), P(1, 3, 2)],
                                           shifted=[S2(A), S2(B)], qexp=(0, 2, 0)),
        tsum(shifted=[S2(A), S2(B)], dens=_ab_dens(4, 2), sign=1, qexp=(1, 2, 0),
             factors=[BF(qm(1), 0), BF(qm(4), 4)], inner=inner(hi=(1, 1))),
    ),
    "thm-7-9": (
        "2-phi-1 in base q with denominator -q",
        _pref(lo_ab=1, base=1) * tsum(dens=[P(1, 1, 1), P(-1, 1, 1)], shifted=[S1(A), S1(B)]),
        tsum(shifted=[S1(A), S1(B)], dens=_ab_dens(2, 1), factors=[BF(qm(2), 2)],
             inner=inner(hi=(1, 1), sign=1)),
    ),
    "thm-7-11": (
        "2-phi-1 with denominator q and argument ab/q^2; inner form 2j^2 + j",
        _pref() * tsum(dens=[P(1, 2, 2), P(1, 1, 2)], shifted=[S2(A), S2(B)], qexp=(0, -2, 0)),
        tsum(shifted=[S2(A), S2(B)], dens=_ab_dens(), factors=[BF(qm(2), 4)],
             qexp=(0, -2, 0), inner=inner(quad=(2, 1))),
    ),
}


# -- specializations of the parameterized theorems ------------------------------

FULL, PLUS, SHIFT = Region.J_FULL, Region.J_PLUS, Region.J_SHIFT
Q, MQ, QI, MQI = qm(1), qm(1, -1), qm(-1), qm(-1, -1)
M1 = Monomial(-1)

# (id, parent, a, b, lhs, rhs)
SPECIALIZATIONS = [
    # thm-7-15
    ("sp-7-15-q-mq", "thm-7-15", Q, MQ,
     tsum(nums=[P(-1, 1, 2)], dens=[P(1, 2, 2)], factors=[BF(-1, 2, -1)], sign=1, qexp=(0, 2, 0)),
     HALF * (poch((1, 2, 4), (1, 4, 4, -1)) * hk((1, 0, 1, 1, 0, 0), sign=(1, 0)))),
    ("sp-7-15-m1-q", "thm-7-15", M1, Q,
     tsum(nums=[P(-1, 0, 2)], dens=[P(1, 2, 2)], qexp=(0, 1, 0)),
     pbar_gf() * hk((1, 0, 1, 0, 0, 0), sign=(0, 1), factors=[(-1, 2, 1)])),
    ("sp-7-15-m1-mq", "thm-7-15", M1, MQ,
     tsum(nums=[P(-1, 0, 1, (2, 0))], dens=[P(1, 1, 1, (2, 0))], qexp=(0, 1, 0)),
     pbar_gf() * hk((1, 0, 1, 0, 0, 0), factors=[(-1, 2, 1)])),
    ("eq-5-8", "thm-7-15", ZERO, Q,
     tsum(dens=[P(1, 2, 2)], factors=[BF(-1, 2, -1)], sign=1, qexp=(1, 2, 0)),
     HALF * (ratio(1, 1, 2) * hk((2, 0, 1, 1, 0, 0), sign=(1, 0), factors=[(1, 2, 1)]))),
    ("sp-7-15-0-mq", "thm-7-15", ZERO, MQ,
     tsum(nums=[P(-1, 1, 2)], dens=[P(1, 1, 1, (2, 0))], factors=[BF(-1, 2, -1)], qexp=(1, 2, 0)),
     HALF * (pod_gf() * hk((2, 0, 1, 1, 0, 0), factors=[(-1, 2, 1)]))),
    ("sp-7-15-0-m1", "thm-7-15", ZERO, M1,
     tsum(nums=[P(-1, 0, 2)], dens=[P(1, 1, 1, (2, 0))], qexp=(1, 1, 0)),
     pbar2_gf() * hk((2, 0, 1, 0, 0, 0), factors=[(-1, 4, 2)])),
    ("sp-7-15-0-0", "thm-7-15", ZERO, ZERO,
     tsum(dens=[P(1, 1, 1, (2, 0))], factors=[BF(-1, 2, -1)], qexp=(2, 2, 0)),
     HALF * (inv_q2q2() * hk((3, 0, 1, 1, 0, 0), factors=[(-1, 4, 2)]))),
    # thm-7-13
    ("sp-7-13-1-mq", "thm-7-13", ONE, MQ,
     tsum(nums=[P(-1, 1, 2)], dens=[P(-1, 2, 2)], factors=[BF(qm(1), 2, -1)], sign=1,
          qexp=(0, 1, 0)),
     hk((1, 0, 1, 1, 0, 0))),
    ("eq-5-1", "thm-7-13", M1, MQ,
     tsum(nums=[P(-1, 1, 2)], dens=[P(1, 2, 2)], factors=[BF(qm(1), 2, -1)], qexp=(0, 1, 0)),
     pbar_gf() * hk((1, 0, 1, 1, 0, 0), sign=(1, 0))),
    ("sp-7-13-1-0", "thm-7-13", ONE, ZERO,
     tsum(dens=[P(-1, 2, 2)], factors=[BF(qm(1), 2, -1)], sign=1, qexp=(1, 1, 0)),
     hk((2, 0, 1, 1, 0, 0), factors=[(1, 2, 1)])),
    ("eq-5-2", "thm-7-13", MQ, ZERO,
     tsum(nums=[P(-1, 1, 2)], dens=[P(1, 4, 4)], factors=[BF(qm(1), 2, -1)], qexp=(1, 2, 0)),
     pod_gf() * hk((2, 0, 1, 2, 0, 0), sign=(1, 0))),
    ("eq-5-3", "thm-7-13", M1, ZERO,
     tsum(dens=[P(1, 2, 2)], factors=[BF(qm(1), 2, -1)], qexp=(1, 1, 0)),
     pbar2_gf() * hk((2, 0, 1, 1, 0, 0), sign=(1, 0), factors=[(1, 2, 1)])),
    ("eq-5-4", "thm-7-13", ZERO, ZERO,
     tsum(dens=[P(1, 4, 4)], factors=[BF(qm(1), 2, -1)], qexp=(2, 2, 0)),
     inv_q2q2() * hk((3, 0, 1, 2, 0, 0), sign=(1, 0), factors=[(1, 2, 1)])),
    # thm-2-2
    ("sp-2-2-0-0", "thm-2-2", ZERO, ZERO,
     tsum(nums=[P(-1, 1, 2)], dens=[P(1, 1, 2), P(1, 4, 4)], qexp=(2, 0, 0)),
     inv_q2q2() * hk((2, 0, 1, 0, 0, 0), factors=[(-1, 4, 2)])),
    ("sp-2-2-m1-0", "thm-2-2", M1, ZERO,
     tsum(nums=[P(-1, 1, 2)], dens=[P(1, 1, 1, (2, 0))], qexp=(1, -1, 0)),
     pbar2_gf() * hk((1, 0, 1, -1, 0, 0), factors=[(-1, 4, 2)])),
    ("sp-2-2-1-0", "thm-2-2", ONE, ZERO,
     tsum(nums=[P(-1, 1, 2)], dens=[P(1, 1, 2), P(-1, 2, 2)], sign=1, qexp=(1, -1, 0)),
     hk((1, 0, 1, -1, 0, 0), sign=(1, 0), factors=[(-1, 4, 2)])),
    ("sp-2-2-q-0", "thm-2-2", Q, ZERO,
     tsum(nums=[P(-1, 1, 2)], dens=[P(1, 4, 4)], sign=1, qexp=(1, 0, 0)),
     ratio(1, 1, 2) * hk((1, 0, 1, 0, 0, 0), sign=(1, 0), factors=[(1, 2, 1)])),
    ("sp-2-2-mq-0", "thm-2-2", MQ, ZERO,
     tsum(nums=[P(-1, 1, 2), P(-1, 1, 2)], dens=[P(1, 1, 2), P(1, 4, 4)], qexp=(1, 0, 0)),
     pod_gf() * hk((1, 0, 1, 0, 0, 0), factors=[(-1, 2, 1)])),
    # thm-7-3
    ("sp-7-3-0-0", "thm-7-3", ZERO, ZERO,
     tsum(dens=[P(-1, 1, 1, (2, 1))], qexp=(2, 1, 0)),
     inv_q2q2() * hk((2, 0, 1, 1, 0, 0), sign=(0, 1), factors=[(-1, 2, 1)])),
    ("sp-7-3-m1-0", "thm-7-3", M1, ZERO,
     tsum(dens=[P(-1, 1, 2, (1, 1))], qexp=(1, 0, 0)),
     pbar2_gf() * hk((1, 0, 1, 0, 0, 0), sign=(0, 1), factors=[(-1, 2, 1)])),
    ("sp-7-3-q-0", "thm-7-3", Q, ZERO,
     tsum(nums=[P(1, 1, 2)], dens=[P(-1, 1, 1, (2, 1))], sign=1, qexp=(1, 1, 0)),
     ratio(1, 1, 2) * hk((1, 0, 1, 1, 0, 0), sign=(1, 1))),
    # thm-9-2
    ("sp-9-2-1-0", "thm-9-2", ONE, ZERO,
     tsum(nums=[P(-1, 1, 2)], dens=[P(-1, 2, 2), P(1, 1, 2, (1, 1))], sign=1, qexp=(1, 1, 0)),
     hk((1, 0, 1, 1, 0, 0), PLUS, sign=(1, 0), factors=[(1, 2, 2)])),
    ("sp-9-2-m1-0", "thm-9-2", M1, ZERO,
     tsum(nums=[P(-1, 1, 2)], dens=[P(1, 1, 1, (2, 1))], qexp=(1, 1, 0)),
     pbar2_gf() * hk((1, 0, 1, 1, 0, 0), PLUS, factors=[(-1, 2, 2)])),
    ("sp-9-2-qi-0", "thm-9-2", QI, ZERO,
     tsum(nums=[P(-1, 1, 2)], dens=[P(1, 4, 4)], sign=1, qexp=(1, 0, 0)),
     ratio(1, 1, 2) * hk((1, 0, 1, 0, 0, 0), PLUS, sign=(1, 0), factors=[(-1, 4, 4)])),
    ("sp-9-2-mqi-0", "thm-9-2", MQI, ZERO,
     tsum(nums=[P(-1, 1, 2), P(-1, 1, 2, (1, 1))], dens=[P(-1, 2, 2), P(1, 1, 1, (2, 1))],
          qexp=(1, 0, 0)),
     pod_gf() * hk((1, 0, 1, 0, 0, 0), PLUS, factors=[(-1, 4, 4)])),
    ("sp-9-2-0-0", "thm-9-2", ZERO, ZERO,
     tsum(nums=[P(-1, 1, 2)], dens=[P(-1, 2, 2), P(1, 1, 1, (2, 1))], qexp=(2, 2, 0)),
     inv_q2q2() * hk((2, 0, 1, 2, 0, 0), PLUS, factors=[(-1, 4, 4)])),
    # thm-9-4
    ("sp-9-4-1-m1", "thm-9-4", ONE, M1,
     tsum(factors=[BF(qm(1), 2, -1)], sign=1, qexp=(0, 2, 0)),
     hk((1, 0, 1, 2, 0, 0), PLUS)),
    ("sp-9-4-1-qi", "thm-9-4", ONE, QI,
     tsum(nums=[P(1, 1, 2)], dens=[P(-1, 2, 2)], qexp=(0, 1, 0)),
     hk((1, 0, 1, 1, 0, 0), PLUS, sign=(1, 0), factors=[(1, 2, 2)])),
    ("sp-9-4-1-mqi", "thm-9-4", ONE, MQI,
     tsum(nums=[P(-1, 1, 2, (1, 1))], dens=[P(-1, 2, 2)], factors=[BF(qm(1), 2, -1)], sign=1,
          qexp=(0, 1, 0)),
     hk((1, 0, 1, 1, 0, 0), PLUS, factors=[(1, 2, 2)])),
    ("sp-9-4-0-1", "thm-9-4", ZERO, ONE,
     tsum(dens=[P(-1, 2, 2)], factors=[BF(qm(1), 2, -1)], sign=1, qexp=(1, 3, 0)),
     hk((2, 0, 1, 3, 0, 0), PLUS, factors=[(1, 2, 2)])),
    ("eq-5-5", "thm-9-4", ZERO, M1,
     tsum(dens=[P(1, 2, 2)], factors=[BF(qm(1), 2, -1)], qexp=(1, 3, 0)),
     pbar2_gf() * hk((2, 0, 1, 3, 0, 0), PLUS, sign=(1, 0), factors=[(-1, 2, 2)])),
    # thm-7-9
    ("sp-7-9-1-0", "thm-7-9", ONE, ZERO,
     tsum(dens=[P(-1, 1, 1)], sign=1, qexp=(HALF, HALF, 0)),
     hk((HALF, 0, 1, HALF, 0, 0), PLUS, sign=(1, 1), factors=[(1, 1, 1)])),
    ("sp-7-9-m1-0", "thm-7-9", M1, ZERO,
     tsum(dens=[P(1, 1, 1)], qexp=(HALF, HALF, 0)),
     pbar_gf() * hk((HALF, 0, 1, HALF, 0, 0), PLUS, sign=(0, 1), factors=[(-1, 1, 1)])),
    ("sp-7-9-0-0", "thm-7-9", ZERO, ZERO,
     tsum(dens=[P(1, 2, 2)], qexp=(1, 1, 0)),
     p_gf() * hk((1, 0, 1, 1, 0, 0), PLUS, sign=(0, 1), factors=[(-1, 2, 2)])),
    # thm-7-11
    ("sp-7-11-1-0", "thm-7-11", ONE, ZERO,
     tsum(dens=[P(1, 1, 2)], sign=1, qexp=(1, -1, 0)),
     hk((1, 0, 2, -1, 1, 0), sign=(1, 0), factors=[(-1, 4, 2)])),
    ("sp-7-11-m1-0", "thm-7-11", M1, ZERO,
     tsum(nums=[P(-1, 2, 2)], dens=[P(1, 1, 1, (2, 0))], qexp=(1, -1, 0)),
     pbar2_gf() * hk((1, 0, 2, -1, 1, 0), factors=[(-1, 4, 2)])),
    ("sp-7-11-q-0", "thm-7-11", Q, ZERO,
     tsum(dens=[P(1, 2, 2)], sign=1, qexp=(1, 0, 0)),
     ratio(1, 1, 2) * hk((1, 0, 2, 0, 1, 0), sign=(1, 0), factors=[(1, 2, 1)])),
    ("sp-7-11-mq-0", "thm-7-11", MQ, ZERO,
     tsum(nums=[P(-1, 1, 2)], dens=[P(1, 1, 1, (2, 0))], qexp=(1, 0, 0)),
     pod_gf() * hk((1, 0, 2, 0, 1, 0), factors=[(-1, 2, 1)])),
    ("sp-7-11-0-0", "thm-7-11", ZERO, ZERO,
     tsum(dens=[P(1, 1, 1, (2, 0))], qexp=(2, 0, 0)),
     inv_q2q2() * hk((2, 0, 2, 0, 1, 0), factors=[(-1, 4, 2)])),
]


# -- univariate theorems, classical identities, bridges ------------------------

T1_LHS = tsum(start=1, qexp=(0, 1, 0), factors=[BF(-1, 2, -1)])
C1_RHS = (F(-1, 4) + F(1, 4) * Power(Theta(Kind.SQUARE, 2), 2)
          + Mono(qm(1)) * Power(Theta(Kind.TRIANGULAR), 2))

# (id, description, lhs, rhs)
UNIVARIATE = [
    ("thm-t1", "sum q^n/(1+q^2n) as a double sum over n^2 + j^2 minus a theta tail",
     T1_LHS, hk((1, 0, 1, 0, 0, 0), n_start=1) - tsum(start=1, qexp=(2, 0, 0))),
    ("cor-c1", "sum q^n/(1+q^2n) through theta series in q^2",
     T1_LHS, C1_RHS),
    ("lem-l1", "double sum over j = -n+1..n of q^(n^2+j^2) through theta series",
     hk((1, 0, 1, 0, 0, 0), SHIFT, n_start=1), C1_RHS),
    ("two-squares", "theta(q)^2 = theta(q^2)^2 + 4q psi(q^4)^2",
     Power(Theta(Kind.SQUARE, 1), 2),
     Power(Theta(Kind.SQUARE, 2), 2) + 4 * (Mono(qm(1)) * Power(Theta(Kind.TRIANGULAR), 2))),
    ("thm-t3-5", "alternating sum over 1/((1+q^2n)(q; q^2)_n) as a double sum over 2n^2 + j^2",
     tsum(start=1, sign=1, qexp=(1, 1, 0), dens=[P(1, 1, 2)], factors=[BF(-1, 2, -1)]),
     hk((2, 0, 1, 0, 0, 0), n_start=1, sign=(1, 0)) - tsum(start=1, sign=1, qexp=(3, 0, 0))),
    ("thm-8-1", "alternating sum over (q^2; q^2)_n/(-q; q)_{2n+1}",
     tsum(sign=1, qexp=(1, 0, 0), nums=[P(1, 2, 2)], dens=[P(-1, 1, 1, (2, 1))]),
     1 + 2 * hk((1, 0, 1, 0, 0, 0), SHIFT, n_start=1, sign=(1, 1))),
    ("eq-5-11", "image of eq-5-8 under q -> -q",
     tsum(dens=[P(1, 2, 2)], factors=[BF(-1, 2, -1)], qexp=(1, 2, 0)),
     HALF * (pod_gf() * hk((2, 0, 1, 1, 0, 0), sign=(0, 1), factors=[(-1, 2, 1)]))),
    ("eq-5-12", "eq-5-2 multiplied by (-q^2; q^2)_inf",
     poch((-1, 2, 2)) * tsum(nums=[P(-1, 1, 2)], dens=[P(1, 4, 4)], factors=[BF(qm(1), 2, -1)],
                             qexp=(1, 2, 0)),
     p_gf() * hk((2, 0, 1, 2, 0, 0), sign=(1, 0))),
]

LIU_412_RHS_QUAD = (1, 0, 1, 0, 0, 0)
LIU_413_QUAD = (HALF, 0, 1, -HALF, 0, 0)

CLASSICAL = [
    ("jacobi-cube", "(q; q)_inf^3 as a sum over m >= |n| of (-1)^m q^(m(m+1)/2)",
     poch((1, 1, 1, 3)), hk((HALF, 0, 0, HALF, 0, 0), Region.JACOBI, sign=(1, 0))),
    ("rogers-hecke", "(q; q)_inf^2 as an indefinite sum over |m| <= n/2",
     poch((1, 1, 1, 2)),
     hk((HALF, 0, F(-3, 2), HALF, HALF, 0), Region.ROGERS, sign=(1, 1))),
    ("liu-412", "sum q^(n^2)/(q^2; q^2)_n, sign-corrected form",
     tsum(qexp=(1, 0, 0), dens=[P(1, 2, 2)]),
     p_gf() * hk(LIU_412_RHS_QUAD, sign=(0, 1), factors=[(-1, 2, 1)])),
    ("liu-413", "alternating sum q^(n(n-1)/2)/(-q; q)_n, sign-corrected form",
     tsum(sign=1, qexp=(HALF, -HALF, 0), dens=[P(-1, 1, 1)]),
     hk(LIU_413_QUAD, sign=(1, 1), factors=[(-1, 2, 1)])),
    # the displayed left side carries a (-1)^n that makes it vanish identically
    ("liu-414", "sum q^(n(n-1)/2)/(q; q)_n, sign-corrected form",
     tsum(qexp=(HALF, -HALF, 0), dens=[P(1, 1, 1)]),
     pbar_gf() * hk(LIU_413_QUAD, sign=(0, 1), factors=[(-1, 2, 1)])),
    ("wang-yee-61", "sum q^n (q; q^2)_n/((1+q^2n)(-q; q^2)_n) as a double sum",
     tsum(start=1, qexp=(0, 1, 0), nums=[P(1, 1, 2)], dens=[P(-1, 1, 2)], factors=[BF(-1, 2, -1)]),
     hk((1, 0, 1, 0, 0, 0), SHIFT, sign=(0, 1))),
    ("chan-liu-48", "1 + 2 sum q^(n^2+n)/((1+q^n)(q; q)_n) as a double sum over (3n^2+n)/2 + j^2",
     1 + 2 * tsum(start=1, qexp=(1, 1, 0), dens=[P(1, 1, 1)], factors=[BF(-1, 1, -1)]),
     # needs the factor (1 - q^(2n+1)) shared by every identity of this shape
     p_gf() * hk((F(3, 2), 0, 1, HALF, 0, 0), sign=(0, 1), factors=[(-1, 2, 1)])),
    ("chan-liu-49", "1 + 2 sum (-1)^n q^(n(n+1)/2)/(1+q^n) as a double sum over n^2 + j^2",
     1 + 2 * tsum(start=1, sign=1, qexp=(HALF, HALF, 0), factors=[BF(-1, 1, -1)]),
     hk((1, 0, 1, 0, 0, 0), sign=(1, 1), factors=[(-1, 2, 1)])),
]

# variants with the sign errors of the original printing; each must MISMATCH
CONTROLS = [
    ("liu-412-uncorrected", "liu-412 with an extra (-1)^n on the double sum",
     CLASSICAL[2][2], p_gf() * hk(LIU_412_RHS_QUAD, sign=(1, 1), factors=[(-1, 2, 1)])),
    ("liu-413-uncorrected", "liu-413 without the (-1)^n on the double sum",
     CLASSICAL[3][2], hk(LIU_413_QUAD, sign=(0, 1), factors=[(-1, 2, 1)])),
    ("liu-414-uncorrected", "liu-414 with an extra (-1)^n on the double sum",
     CLASSICAL[4][2], pbar_gf() * hk(LIU_413_QUAD, sign=(1, 1), factors=[(-1, 2, 1)])),
    ("liu-414-as-displayed", "liu-414 with (-1)^n on the left; the left side is zero",
     tsum(sign=1, qexp=(HALF, -HALF, 0), dens=[P(1, 1, 1)]), CLASSICAL[4][3]),
    ("chan-liu-48-as-displayed", "chan-liu-48 without the factor (1 - q^(2n+1))",
     CLASSICAL[6][2], p_gf() * hk((F(3, 2), 0, 1, HALF, 0, 0), sign=(0, 1))),
]


# -- links -----------------------------------------------------------------------

def eta(c=1, qpow=0, periodic=(), finite_factors=()) -> Builder:
    """``c q^qpow prod (q^r; q^m)_inf^e prod (1 - q^k)^f``.

    ``periodic`` holds ``(r, m, e)``; ``finite_factors`` holds ``(k, f)``.
    """
    from ..hypergeom import RationalQ

    out: Builder = Mono(Monomial(F(c), qpow))
    if periodic:
        out = out * poch(*[(1, r, m, e) for r, m, e in periodic])
    if finite_factors:
        r = RationalQ.monomial(1)
        for k, f in finite_factors:
            for _ in range(abs(f)):
                r = r.mul_binomial(qm(k)) if f > 0 else r.div_binomial(qm(k))
        from .builders import Rational
        out = out * Rational(r)
    return out


# kappa factors relating each specialization to its display; see Link
KAPPA: dict = {
    "eq-5-1": eta(periodic=((1, 2, 2), (2, 2, 1)), finite_factors=((2, 1),)),
    "eq-5-11": eta(c=2, periodic=((1, 4, 1), (3, 4, 1), (4, 4, 1)), finite_factors=((1, -1), (2, 1))),
    "eq-5-12": eta(periodic=((1, 1, 1),), finite_factors=((2, 1),)),
    "eq-5-2": eta(periodic=((1, 4, 1), (3, 4, 1), (4, 4, 1)), finite_factors=((2, 1),)),
    "eq-5-3": eta(periodic=((2, 4, 2), (4, 4, 1)), finite_factors=((1, 1),)),
    "eq-5-4": eta(periodic=((2, 2, 1),), finite_factors=((1, 1),)),
    "eq-5-5": eta(periodic=((2, 4, 2), (4, 4, 1)), finite_factors=((1, 1), (2, -1), (4, 1))),
    "eq-5-8": eta(c=2, periodic=((1, 2, -1), (2, 2, 1)), finite_factors=((1, 1),)),
    "sp-2-2-0-0": eta(periodic=((2, 2, 1),)),
    "sp-2-2-m1-0": eta(periodic=((2, 4, 2), (4, 4, 1))),
    "sp-2-2-mq-0": eta(periodic=((1, 4, 1), (3, 4, 1), (4, 4, 1)), finite_factors=((1, -1), (2, 1))),
    "sp-2-2-q-0": eta(periodic=((1, 2, -1), (2, 2, 1)), finite_factors=((1, 1),)),
    "sp-7-11-0-0": eta(periodic=((2, 2, 1),)),
    "sp-7-11-m1-0": eta(periodic=((2, 4, 2), (4, 4, 1))),
    "sp-7-11-mq-0": eta(periodic=((1, 4, 1), (3, 4, 1), (4, 4, 1)), finite_factors=((1, -1), (2, 1))),
    "sp-7-11-q-0": eta(periodic=((1, 2, -1), (2, 2, 1)), finite_factors=((1, 1),)),
    "sp-7-13-1-0": eta(finite_factors=((1, 1),)),
    "sp-7-13-1-mq": eta(finite_factors=((2, 1),)),
    "sp-7-15-0-0": eta(c=2, periodic=((2, 2, 1),)),
    "sp-7-15-0-m1": eta(periodic=((2, 4, 2), (4, 4, 1))),
    "sp-7-15-0-mq": eta(c=2, periodic=((1, 4, 1), (3, 4, 1), (4, 4, 1)), finite_factors=((1, -1), (2, 1))),
    "sp-7-15-m1-mq": eta(periodic=((1, 2, 2), (2, 2, 1)), finite_factors=((1, -1), (2, 1))),
    "sp-7-15-m1-q": eta(periodic=((1, 2, 2), (2, 2, 1)), finite_factors=((1, 1),)),
    "sp-7-15-q-mq": eta(c=2, periodic=((2, 4, -1), (4, 4, 1)), finite_factors=((2, 1),)),
    "sp-7-3-0-0": eta(periodic=((2, 2, 1),)),
    "sp-7-3-m1-0": eta(periodic=((2, 4, 2), (4, 4, 1))),
    "sp-7-3-q-0": eta(periodic=((1, 2, -1), (2, 2, 1)), finite_factors=((1, 1),)),
    "sp-7-9-0-0": eta(periodic=((1, 1, 1),)),
    "sp-7-9-1-0": eta(finite_factors=((1, 1),)),
    "sp-7-9-m1-0": eta(periodic=((1, 2, 2), (2, 2, 1)), finite_factors=((1, -1), (2, 1))),
    "sp-9-2-0-0": eta(periodic=((2, 2, 1),), finite_factors=((1, 1),)),
    "sp-9-2-1-0": eta(finite_factors=((1, 1), (2, 1))),
    "sp-9-2-m1-0": eta(periodic=((2, 4, 2), (4, 4, 1)), finite_factors=((1, 1), (2, -1), (4, 1))),
    "sp-9-2-mqi-0": eta(periodic=((1, 4, 1), (3, 4, 1), (4, 4, 1)), finite_factors=((1, 1),)),
    "sp-9-2-qi-0": eta(periodic=((1, 2, -1), (2, 2, 1)), finite_factors=((1, 1),)),
    "sp-9-4-0-1": eta(finite_factors=((1, 1), (2, 1))),
    "sp-9-4-1-m1": eta(finite_factors=((1, 1), (4, 1))),
    "sp-9-4-1-mqi": eta(finite_factors=((1, 1), (2, 1))),
    "sp-9-4-1-qi": eta(finite_factors=((1, 1), (2, 1))),
    "thm-t1": eta(finite_factors=((1, 1),)),
    "wang-yee-61": eta(finite_factors=((1, 1),)),
}

# (id, parent, a, b, c0, c1, negate_q) for records outside SPECIALIZATIONS
EXTRA_LINKS = [
    ("thm-t1", "thm-7-15", ONE, Q, 1, 2, False),
    ("thm-t3-5", "thm-7-15", ONE, ZERO, 1, 2, False),
    ("thm-8-1", "thm-7-3", ONE, ZERO, 0, 1, False),
    ("wang-yee-61", "thm-7-15", ONE, MQ, 1, 2, True),
    ("eq-5-11", "thm-7-15", ZERO, Q, 0, 1, True),
    ("eq-5-12", "thm-7-13", MQ, ZERO, 0, 1, False),
]


def _link(rid, parent, a, b, c0=0, c1=1, neg=False) -> Link:
    return Link(parent, a, b, KAPPA.get(rid), F(c0), F(c1), neg)


# -- finite lemmas and transforms ------------------------------------------------

_G1 = dict(a=qm(1, 2), b=qm(2, -3), d=qm(1, HALF), e=qm(3, 5))
_G2 = dict(a=qm(0, F(-1, 3)), b=qm(1, 7), d=qm(2, -2), e=qm(1, F(3, 4)))
_G3 = dict(a=qm(2, -1), b=qm(0, 3), d=qm(3, F(1, 5)), e=qm(-1, 2))
_G4 = dict(a=qm(1, F(2, 3)), b=qm(1, -1), d=qm(0, 4), e=qm(2, -7))
ABDE_SAMPLES = (_G1, _G2, _G3, _G4)
ACD_SAMPLES = (
    dict(alpha=qm(1, 2), c=qm(1, -3), d=qm(2, HALF)),
    dict(alpha=qm(0, F(1, 3)), c=qm(2, 5), d=qm(-1, -1)),
    dict(alpha=qm(2, -1), c=qm(0, 7), d=qm(1, F(2, 3))),
    dict(alpha=qm(1, F(-5, 4)), c=qm(3, 2), d=qm(0, -3)),
)

FINITE = [
    ("eq-1-1", "terminating 3-phi-2 transformation with parameters a, b, d, e",
     finite.eq_1_1, ABDE_SAMPLES),
    ("eq-7-1", "terminating 3-phi-2 transformation with a q^n in the numerator",
     finite.eq_7_1, ABDE_SAMPLES),
    ("eq-1-2", "terminating 3-phi-2 as a well-poised sum", finite.eq_1_2, ACD_SAMPLES),
    ("eq-7-12", "terminating 2-phi-1 as a well-poised sum", finite.eq_7_12, ACD_SAMPLES),
    ("eq-1-6", "(-1)^n q^(n(n+1)) 3-phi-2 equals a partial theta sum", finite.eq_1_6, (None,)),
    ("eq-1-7", "two terminating 3-phi-2 series related by q^(n(n+1))", finite.eq_1_7, (None,)),
    ("eq-7-14", "terminating 3-phi-2 with -1 equals (-1)^n times a partial theta sum",
     finite.eq_7_14, (None,)),
    ("eq-7-2", "alternating partial theta sum as a 3-phi-2", finite.eq_7_2, (None,)),
    ("eq-7-4", "3-phi-2 over (-q^2, -q^3) at argument q", finite.eq_7_4, (None,)),
    ("eq-7-6", "3-phi-2 over (-q^2, q^3) at argument -q", finite.eq_7_6, (None,)),
    ("eq-7-7", "3-phi-2 over (-q^2, q^3) at argument q^2", finite.eq_7_7, (None,)),
    ("eq-7-8", "2-phi-1 in base q with denominator -q", finite.eq_7_8, (None,)),
    ("eq-7-10", "2-phi-1 with denominator q and partial sum of q^(2j^2+j)", finite.eq_7_10, (None,)),
    ("eq-9-1", "3-phi-2 with q^(2n+4) and numerator -q", finite.eq_9_1, (None,)),
    ("eq-9-3", "3-phi-2 with q^(2n+4) and numerator q at argument q^2", finite.eq_9_3, (None,)),
]

_A, _B = qm(3, HALF), qm(4, 3)
TRANSFORM_SAMPLES = {
    "eq-1-3": (
        dict(s=2, alpha=qm(2), beta=qm(0, -1), c=qm(1), d=qm(2, -1), a=ONE, b=qm(1)),
        dict(s=2, alpha=qm(2), beta=qm(1), c=qm(2, -1), d=qm(3), a=_A, b=_B),
        dict(s=2, alpha=qm(4), beta=qm(1), c=qm(2, -1), d=qm(3), a=_A, b=_B),
        dict(s=1, alpha=qm(1), beta=qm(1, 2), c=qm(1, -1), d=qm(2, 3), a=_A, b=_B),
        dict(s=1, alpha=qm(2, -1), beta=qm(0, F(1, 3)), c=qm(1, 5), d=qm(3), a=qm(1, -1),
             b=qm(3, 2)),
        dict(s=3, alpha=qm(3), beta=qm(2), c=qm(1, -2), d=qm(4), a=_A, b=_B),
    ),
    "eq-t2-4": (
        dict(s=2, z=qm(-2), alpha=qm(2), beta=qm(1), c=qm(1, -1), d=qm(2, -1), a=_A, b=_B),
        dict(s=2, z=qm(-1), alpha=qm(2), beta=qm(2), c=qm(2, -1), d=qm(3, -1), a=_A, b=_B),
        dict(s=2, z=qm(-2), alpha=qm(4), beta=qm(1, -1), c=qm(2, -1), d=qm(3), a=_A, b=_B),
        dict(s=1, z=qm(-1), alpha=qm(1), beta=qm(1, 2), c=qm(1, -1), d=qm(2, 3), a=_A, b=_B),
        dict(s=1, z=qm(0, HALF), alpha=qm(2, -1), beta=qm(0, 3), c=qm(1, 5), d=qm(3),
             a=qm(1, -1), b=qm(3, 2)),
        dict(s=3, z=qm(-2), alpha=qm(3), beta=qm(2), c=qm(1, -2), d=qm(4), a=_A, b=_B),
    ),
    "eq-t2-9": (
        dict(s=1, alpha=qm(2), c=qm(1, -1), z=qm(-1), a=_A, b=_B),
        dict(s=2, alpha=qm(2), c=qm(1), z=qm(-2), a=_A, b=_B),
        dict(s=1, alpha=qm(1), c=qm(2, 3), z=qm(0, 2), a=qm(1, -1), b=qm(2)),
        dict(s=2, alpha=qm(4, -1), c=qm(1, HALF), z=qm(-1), a=_A, b=_B),
        dict(s=1, alpha=qm(3), c=qm(1, -1), z=qm(-2), a=qm(2), b=qm(2, -1)),
        dict(s=3, alpha=qm(3), c=qm(2), z=qm(-3), a=_A, b=_B),
    ),
    "eq-2-1": (
        dict(s=1, alpha=qm(1), beta=qm(1, 2), gamma=qm(2, -1), c=qm(1, -1), d=qm(2, 3), h=qm(3),
             z=qm(-1), a=_A, b=_B),
        dict(s=2, alpha=qm(2), beta=qm(2), gamma=qm(1, -1), c=qm(2, -1), d=qm(3, -1),
             h=qm(1, 2), z=qm(-2), a=_A, b=_B),
        dict(s=1, alpha=qm(2), beta=qm(0, 3), gamma=qm(1), c=qm(1, 5), d=qm(2), h=qm(1, -1),
             z=qm(0), a=qm(1, -1), b=qm(3, 2)),
        dict(s=2, alpha=qm(4), beta=qm(1), gamma=qm(2), c=qm(1, -1), d=qm(3), h=qm(2, -3),
             z=qm(-1), a=_A, b=_B),
        dict(s=1, alpha=qm(3, -1), beta=qm(1, -1), gamma=qm(2, HALF), c=qm(2, 7), d=qm(1),
             h=qm(3), z=qm(-2), a=_A, b=_B),
        dict(s=3, alpha=qm(3), beta=qm(2), gamma=qm(1), c=qm(1, -2), d=qm(4), h=qm(2, 3),
             z=qm(-3), a=_A, b=_B),
    ),
}

TRANSFORMS = [
    ("eq-2-1", "q-transformation of a 5-phi-4 into a well-poised outer sum of 4-phi-3",
     finite.eq_2_1),
    ("eq-t2-4", "the case gamma = h of eq-2-1", finite.eq_t2_4),
    ("eq-1-3", "the case z = 1 of eq-t2-4", finite.eq_1_3),
    ("eq-t2-9", "the case beta = d of eq-t2-4", finite.eq_t2_9),
]


# -- assembly --------------------------------------------------------------------

def _build():
    out = {}

    def add(rec):
        if rec.id in out:
            raise ValueError(f"duplicate id {rec.id}")
        out[rec.id] = rec

    for rid, (desc, lhs, rhs) in PARAMETERIZED.items():
        add(IdentityRecord(rid, desc, f"parameterized theorem {rid}", Mode.PARAMETERIZED,
                           lhs, rhs, default_order=40, tags=("parameterized",)))
    for rid, parent, a, b, lhs, rhs in SPECIALIZATIONS:
        add(IdentityRecord(rid, f"{parent} at (a, b) = ({a}, {b})",
                           f"specialization of {parent}", Mode.UNIVARIATE, lhs, rhs,
                           links=(_link(rid, parent, a, b),), tags=("specialization",)))
    extra = {e[0]: e for e in EXTRA_LINKS}
    for rid, desc, lhs, rhs in UNIVARIATE:
        links = ()
        if rid in extra:
            _, parent, a, b, c0, c1, neg = extra[rid]
            links = (_link(rid, parent, a, b, c0, c1, neg),)
        add(IdentityRecord(rid, desc, rid, Mode.UNIVARIATE, lhs, rhs, links=links,
                           tags=("univariate",)))
    for rid, desc, lhs, rhs in CLASSICAL:
        links = ()
        if rid in extra:
            _, parent, a, b, c0, c1, neg = extra[rid]
            links = (_link(rid, parent, a, b, c0, c1, neg),)
        add(IdentityRecord(rid, desc, rid, Mode.UNIVARIATE, lhs, rhs, default_order=300,
                           links=links, tags=("classical",)))
    for rid, desc, pair, samples in FINITE:
        add(IdentityRecord(rid, desc, rid, Mode.FINITE_LEMMA, pair=pair, samples=samples,
                           default_order=12, tags=("finite",)))
    for rid, desc, pair in TRANSFORMS:
        add(IdentityRecord(rid, desc, rid, Mode.TRANSFORM_SAMPLED, pair=pair,
                           samples=TRANSFORM_SAMPLES[rid], default_order=80, tags=("transform",)))
    return out


def _build_controls():
    return {rid: IdentityRecord(rid, desc, rid, Mode.UNIVARIATE, lhs, rhs, default_order=300,
                                tags=("control",))
            for rid, desc, lhs, rhs in CONTROLS}


REGISTRY = _build()
CONTROL_REGISTRY = _build_controls()
ALIASES = {"eq-1-6-n-range": "eq-1-6"}


def get_record(rid: str) -> IdentityRecord:
    rid = ALIASES.get(rid, rid)
    if rid in REGISTRY:
        return REGISTRY[rid]
    if rid in CONTROL_REGISTRY:
        return CONTROL_REGISTRY[rid]
    raise KeyError(rid)


def all_ids(include_controls: bool = False) -> list:
    ids = sorted(REGISTRY)
    if include_controls:
        ids += sorted(CONTROL_REGISTRY)
    return ids


__all__ = ["REGISTRY", "CONTROL_REGISTRY", "ALIASES", "get_record", "all_ids", "KAPPA",
           "PARAMETERIZED", "SPECIALIZATIONS", "as_builder", "NegQ"]
