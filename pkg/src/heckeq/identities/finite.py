"""Exact sides of the terminating lemmas and sampled transformation formulas.

Finite lemmas map ``(n, params)`` to a pair of :class:`RationalQ` values.
Transformations map ``(params, order)`` to a pair of truncated series: the
left side is an infinite r-phi-s expanded by :func:`build_term_sum`, the
right side an outer sum whose terms are exact rational functions of ``q``.
Parameter dictionaries hold univariate monomials; ``s`` is the base
exponent (the formulas are read with ``q`` replaced by ``q^s``).
"""

from __future__ import annotations

from fractions import Fraction

from ..hypergeom import (
    LOOKAHEAD,
    DivergentSpecError,
    FinitePhiSpec,
    RationalQ,
    TermPoch,
    TermSumSpec,
    build_term_sum,
    finite_phi,
    finite_phi_terms,
    rq_poch,
    theta_partial,
)
from ..ring import DEFAULT_WEIGHTS, Monomial
from ..series import TruncatedSeries


def qm(k=1, c=1) -> Monomial:
    return Monomial(Fraction(c), k)


def _mono(m: Monomial) -> RationalQ:
    return RationalQ.from_monomial(m)


def _phi(n, nums, dens, z, step=1) -> RationalQ:
    return finite_phi(FinitePhiSpec(n, tuple(nums), tuple(dens), z, step))


def _rinv(x: Monomial, step: int, count: int) -> RationalQ:
    """``1 / (x; q^step)_count``."""
    r = RationalQ.monomial(1)
    for k in range(count):
        r = r.div_binomial(x.qshift(k * step))
    return r


def _well_poised(alpha: Monomial, j: int, step: int = 1) -> RationalQ:
    """``(1 - alpha q^(2j)) (alpha; q)_j / (1 - alpha)``, base ``q^step``, pole-free."""
    if j == 0:
        return RationalQ.monomial(1)
    return rq_poch(alpha.qshift(step), step, j - 1).mul_binomial(alpha.qshift(2 * j * step))


# -- parametric contiguous relations -------------------------------------------


def eq_1_1(n, p):
    a, b, d, e = p["a"], p["b"], p["d"], p["e"]
    lhs = _phi(n, [qm(-n), a, b], [d, e], d * e * qm(n) / (a * b))
    pref = rq_poch(e / a, 1, n) * _rinv(e, 1, n)
    rhs = pref * _phi(n, [qm(-n), a, d / b], [d, a * qm(1 - n) / e], qm(1))
    return lhs, rhs


def eq_7_1(n, p):
    a, b, d, e = p["a"], p["b"], p["d"], p["e"]
    an = a * qm(n)
    lhs = _phi(n, [qm(-n), an, b], [d, e], d * e / (a * b))
    pref = rq_poch(a * qm(1) / d, 1, n) * rq_poch(a * qm(1) / e, 1, n)
    pref = pref * _rinv(d, 1, n) * _rinv(e, 1, n)
    pref = pref * _mono((d * e / (a * qm(1))) ** n)
    rhs = pref * _phi(n, [qm(-n), an, a * b * qm(1) / (d * e)],
                      [a * qm(1) / d, a * qm(1) / e], qm(1) / b)
    return lhs, rhs


def _pref_12(n, alpha):
    """``(-1)^n (alpha q; q)_n / (q; q)_n q^(n(n+1)/2)``."""
    r = rq_poch(alpha.qshift(1), 1, n) * _rinv(qm(1), 1, n)
    return r.mul_monomial(Monomial(-1 if n % 2 else 1, n * (n + 1) // 2))


def eq_1_2(n, p):
    alpha, c, d = p["alpha"], p["c"], p["d"]
    lhs = _pref_12(n, alpha) * _phi(n, [qm(-n), alpha * qm(n + 1), alpha * c * d / qm(1)],
                                    [alpha * c, alpha * d], qm(0))
    rhs = RationalQ()
    for j in range(n + 1):
        t = _well_poised(alpha, j)
        t = t * rq_poch(qm(1) / c, 1, j) * rq_poch(qm(1) / d, 1, j)
        t = t * _rinv(qm(1), 1, j) * _rinv(alpha * c, 1, j) * _rinv(alpha * d, 1, j)
        t = t.mul_monomial(Monomial(-1 if j % 2 else 1, 0)
                           * Monomial(1, j * (j - 3) // 2) * (alpha * c * d) ** j)
        rhs = rhs + t
    return lhs, rhs


def eq_7_12(n, p):
    alpha, c = p["alpha"], p["c"]
    lhs = _pref_12(n, alpha) * _phi(n, [qm(-n), alpha * qm(n + 1)], [alpha * c], qm(0))
    rhs = RationalQ()
    for j in range(n + 1):
        t = _well_poised(alpha, j) * rq_poch(qm(1) / c, 1, j)
        t = t * _rinv(qm(1), 1, j) * _rinv(alpha * c, 1, j)
        t = t.mul_monomial(Monomial(1, j * j - j) * (alpha * c) ** j)
        rhs = rhs + t
    return lhs, rhs


# -- fixed-parameter lemmas (base q^2 unless stated) --------------------------------


def _sign(n):
    return -1 if n % 2 else 1


def _p2(n, nums, dens, z):
    return _phi(n, [qm(-2 * n)] + nums, dens, z, step=2)


def eq_1_6(n, p=None):
    lhs = _p2(n, [qm(2 * n + 2), qm(1, -1)], [qm(1), qm(2, -1)], qm(0))
    lhs = lhs.mul_monomial(Monomial(_sign(n), n * (n + 1)))
    return lhs, theta_partial(-n, n)


def eq_1_7(n, p=None):
    lhs = _p2(n, [qm(2 * n + 2), qm(0, -1)], [qm(1), qm(2, -1)], qm(2))
    rhs = _p2(n, [qm(2 * n + 2), qm(1, -1)], [qm(1), qm(2, -1)], qm(0)).mul_monomial(qm(n * (n + 1)))
    return lhs, rhs


def eq_7_14(n, p=None):
    lhs = _p2(n, [qm(2 * n + 2), qm(0, -1)], [qm(1), qm(2, -1)], qm(2))
    return lhs, theta_partial(-n, n).scale(_sign(n))


def eq_7_2(n, p=None):
    lhs = _p2(n, [qm(2 * n + 2), qm(1)], [qm(1, -1), qm(2, -1)], qm(0))
    lhs = lhs.mul_monomial(Monomial(_sign(n), n * (n + 1)))
    return lhs, theta_partial(-n, n, sign=1)


def eq_7_4(n, p=None):
    lhs = _p2(n, [qm(2 * n + 2), qm(2)], [qm(2, -1), qm(3, -1)], qm(1))
    rhs = theta_partial(-n, n, sign=1).mul_binomial(qm(1, -1)).div_binomial(qm(2 * n + 1, -1))
    rhs = rhs.mul_monomial(Monomial(_sign(n), -n * n))
    return lhs, rhs


def eq_7_6(n, p=None):
    lhs = _p2(n, [qm(2 * n + 2), qm(2)], [qm(2, -1), qm(3)], qm(1, -1))
    rhs = theta_partial(-n, n).mul_binomial(qm(1)).div_binomial(qm(2 * n + 1))
    return lhs, rhs.mul_monomial(qm(-n * n))


def eq_7_7(n, p=None):
    lhs = _p2(n, [qm(2 * n + 2), qm(1)], [qm(2, -1), qm(3)], qm(2))
    rhs = theta_partial(-n, n).mul_binomial(qm(1)).div_binomial(qm(2 * n + 1))
    return lhs, rhs.mul_monomial(qm(n))


def eq_7_8(n, p=None):
    # base q
    lhs = _phi(n, [qm(-n), qm(n + 2)], [qm(1, -1)], qm(0))
    lhs = lhs.mul_binomial(qm(n + 1)).mul_monomial(qm(n * (n + 1) // 2))
    return lhs, theta_partial(-n, n + 1, sign=1).scale(_sign(n))


def eq_7_10(n, p=None):
    lhs = _p2(n, [qm(2 * n + 2)], [qm(1)], qm(0))
    lhs = lhs.mul_monomial(Monomial(_sign(n), n * (n + 1)))
    return lhs, theta_partial(-n, n, quad=(2, 1))


def eq_9_1(n, p=None):
    lhs = _p2(n, [qm(2 * n + 4), qm(1, -1)], [qm(2, -1), qm(3)], qm(0))
    rhs = theta_partial(-n, n + 1).mul_binomial(qm(1)).div_binomial(qm(2 * n + 2))
    return lhs, rhs.mul_monomial(Monomial(_sign(n), -n * n - n))


def eq_9_3(n, p=None):
    lhs = _p2(n, [qm(2 * n + 4), qm(1)], [qm(2, -1), qm(3)], qm(2))
    rhs = theta_partial(-n, n + 1).mul_binomial(qm(1)).div_binomial(qm(2 * n + 2))
    return lhs, rhs.mul_monomial(qm(n))


# -- sampled transformations -----------------------------------------------------


def _lhs_transform(p, nums, dens, z, order, weights):
    """``(alpha q, alpha a b / q)_inf / (alpha a, alpha b)_inf * r-phi-s(...; z)``."""
    from .builders import Product

    s = p.get("s", 1)
    al, a, b = p["alpha"], p["a"], p["b"]
    pref = Product((
        (al, s, s, 1), (al * a * b / qm(s), 0, s, 1), (al * a, 0, s, -1), (al * b, 0, s, -1),
    )).build(order, weights, False)
    r, ss = len(nums), len(dens)
    spec = TermSumSpec(
        numerators=tuple(TermPoch(x, 0, s) for x in nums),
        denominators=(TermPoch(qm(0), s, s),) + tuple(TermPoch(x, 0, s) for x in dens),
        base=z, phi_sign_power=(1 + ss - r, s))
    return (pref * build_term_sum(spec, order, weights, parametric=False)).truncate(order)


def _rhs_transform(p, inner, order, weights):
    """Outer sum of the transformation formulas.

    ``sum_n (1 - alpha q^2n)(alpha, q/a, q/b)_n (-alpha a b/q)^n q^(n(n-1)/2)
    / ((1 - alpha)(q, alpha a, alpha b)_n) * inner(n)`` where ``inner(n)``
    lists the exact product terms of a terminating sum.  Those terms carry
    large negative powers of ``q`` that cancel in their total, so the inner
    sum is expanded after shifting by the valuation of the outer factor, and
    the outer loop stops once ``val(outer) + min val(inner terms)`` stays at
    or above the order.
    """
    s = p.get("s", 1)
    al, a, b = p["alpha"], p["a"], p["b"]
    acc = TruncatedSeries.zero(order, weights)
    settled = 0
    for n in range(4 * order + 40):
        t = _well_poised(al, n, s)
        t = t * rq_poch(qm(s) / a, s, n) * rq_poch(qm(s) / b, s, n)
        t = t * _rinv(qm(s), s, n) * _rinv(al * a, s, n) * _rinv(al * b, s, n)
        t = t.mul_monomial((Monomial(-1) * al * a * b / qm(s)) ** n * qm(s * n * (n - 1) // 2))
        term = None
        vt = t.valuation()
        us = [u for u in inner(n) if u.valuation() is not None]
        if vt is not None and us and vt + min(u.valuation() for u in us) < order:
            # expand q^vt * inner so every truncation stays positive
            shift = qm(vt)
            S = TruncatedSeries.zero(order, weights)
            for u in us:
                if u.valuation() + vt < order:
                    S = S + u.mul_monomial(shift).series(order, weights)
            if not S.is_zero():
                t0 = t.mul_monomial(qm(-vt))
                term = (t0.series(order - S.floor, weights) * S).truncate(order)
                if term.is_zero():
                    term = None
        if term is None:
            settled += 1
            if settled >= LOOKAHEAD:
                return acc
        else:
            settled = 0
            acc = acc + term
    raise DivergentSpecError("outer sum did not settle")


def _phi_terms(n, nums, dens, z, step):
    return finite_phi_terms(FinitePhiSpec(n, tuple(nums), tuple(dens), z, step))


def eq_2_1(p, order, weights=DEFAULT_WEIGHTS):
    s = p.get("s", 1)
    al, a, b, z = p["alpha"], p["a"], p["b"], p["z"]
    beta, gamma, c, d, h = p["beta"], p["gamma"], p["c"], p["d"], p["h"]
    lhs = _lhs_transform(p, [qm(s) / a, qm(s) / b, beta, gamma], [c, d, h],
                         al * a * b * z / qm(s), order, weights)
    rhs = _rhs_transform(p, lambda n: _phi_terms(n, [qm(-s * n), al * qm(s * n), beta, gamma],
                                                 [c, d, h], qm(s) * z, s), order, weights)
    return lhs, rhs


def eq_t2_4(p, order, weights=DEFAULT_WEIGHTS):
    s = p.get("s", 1)
    al, a, b, z = p["alpha"], p["a"], p["b"], p["z"]
    beta, c, d = p["beta"], p["c"], p["d"]
    lhs = _lhs_transform(p, [qm(s) / a, qm(s) / b, beta], [c, d], al * a * b * z / qm(s),
                         order, weights)
    rhs = _rhs_transform(p, lambda n: _phi_terms(n, [qm(-s * n), al * qm(s * n), beta], [c, d],
                                           qm(s) * z, s), order, weights)
    return lhs, rhs


def eq_1_3(p, order, weights=DEFAULT_WEIGHTS):
    return eq_t2_4(dict(p, z=qm(0)), order, weights)


def eq_t2_9(p, order, weights=DEFAULT_WEIGHTS):
    s = p.get("s", 1)
    al, a, b, z, c = p["alpha"], p["a"], p["b"], p["z"], p["c"]
    lhs = _lhs_transform(p, [qm(s) / a, qm(s) / b], [c], al * a * b * z / qm(s), order, weights)
    rhs = _rhs_transform(p, lambda n: _phi_terms(n, [qm(-s * n), al * qm(s * n)], [c],
                                           qm(s) * z, s), order, weights)
    return lhs, rhs


def as_series(r: RationalQ, order: int, weights=DEFAULT_WEIGHTS) -> TruncatedSeries:
    return r.series(order, weights)
