"""Single-index q-hypergeometric sums.

:class:`TermSumSpec` describes a summand built from q-Pochhammer symbols with
counts linear in ``n``, shifted polynomials ``prod (x - q^k)``, a quadratic
power of q, a monomial raised to ``n``, binomial factors ``(1 - m q^(cn))^(+-1)``
and an optional finite theta-type inner sum.  :func:`build_term_sum` expands
such a sum to a truncated series.

Terminating sums are evaluated exactly as :class:`RationalQ` values, a
Laurent polynomial over a product of binomials ``(1 - c q^k)``.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional, Sequence

from .ring import DEFAULT_WEIGHTS, ONE, Monomial, as_rational
from .series import (
    NonTerminatingError,
    PoleError,
    TruncatedSeries,
    mul_shifted,
)

LOOKAHEAD = 8


class DivergentSpecError(NonTerminatingError):
    pass


class NonIntegerExponentError(ValueError):
    pass


def _lin(c, n):
    return c[0] * n + c[1]


@dataclass(frozen=True)
class TermPoch:
    """``(x q^start; q^step)_(c1*n + c0)`` inside a summand."""

    x: Monomial
    start: int = 0
    step: int = 1
    count: tuple = (1, 0)

    def factor(self, k: int) -> Monomial:
        return self.x.qshift(self.start + k * self.step)


@dataclass(frozen=True)
class ShiftedFactor:
    """``prod_{k < c1*n + c0} (x - q^(start + k*step))``."""

    x: Monomial
    start: int = 2
    step: int = 2
    count: tuple = (1, 0)


@dataclass(frozen=True)
class BinomialFactor:
    """``(1 - m q^(c*n))^power`` with ``power`` in {1, -1}."""

    m: Monomial
    c: int
    power: int = 1

    def at(self, n: int) -> Monomial:
        return self.m.qshift(self.c * n)


@dataclass(frozen=True)
class InnerSum:
    """``sum_{j=lo(n)}^{hi(n)} (-1)^(sign*j) q^(c2*j^2 + c1*j)``."""

    lo: tuple = (-1, 0)
    hi: tuple = (1, 0)
    quad: tuple = (1, 0)
    sign: int = 0

    def exponent(self, j: int) -> int:
        e = Fraction(self.quad[0]) * j * j + Fraction(self.quad[1]) * j
        if e.denominator != 1:
            raise NonIntegerExponentError(f"inner exponent {e} at j={j}")
        return int(e)

    def min_exponent(self, n: int) -> Optional[int]:
        lo, hi = _lin(self.lo, n), _lin(self.hi, n)
        if lo > hi:
            return None
        cands = {lo, hi}
        c2, c1 = Fraction(self.quad[0]), Fraction(self.quad[1])
        if c2 > 0:
            v = -c1 / (2 * c2)
            for j in (math.floor(v), math.ceil(v)):
                if lo <= j <= hi:
                    cands.add(j)
        return min(self.exponent(j) for j in cands)

    def series(self, n: int, order: int, weights) -> TruncatedSeries:
        lo, hi = _lin(self.lo, n), _lin(self.hi, n)
        wq = weights[0]
        terms: dict = {}
        for j in range(lo, hi + 1):
            e = self.exponent(j)
            if wq * e >= order:
                continue
            c = -1 if (self.sign and j % 2) else 1
            terms[(e, 0, 0)] = terms.get((e, 0, 0), 0) + c
        return TruncatedSeries.from_terms(terms, order, weights, parametric=False)


@dataclass(frozen=True)
class TermSumSpec:
    """Declarative summand for ``sum_{n >= start} term(n)``.

    ``term(n) = scale * (-1)^(sign*n) * q^(qexp(n)) * base^n
    * prod numerators / prod denominators * prod shifted * prod factors * inner(n)``

    ``qexp`` is ``(c2, c1, c0)``; ``phi_sign_power = (p, step)`` multiplies by
    ``((-1)^n q^(step*n(n-1)/2))^p`` as in the standard r-phi-s normalization.
    """

    start: int = 0
    numerators: tuple = ()
    denominators: tuple = ()
    shifted: tuple = ()
    sign: int = 0
    qexp: tuple = (0, 0, 0)
    base: Monomial = ONE
    factors: tuple = ()
    inner: Optional[InnerSum] = None
    phi_sign_power: tuple = (0, 1)
    scale: Fraction = Fraction(1)
    stop: Optional[int] = None

    def folded(self) -> "TermSumSpec":
        p, step = self.phi_sign_power
        if not p:
            return self
        c2, c1, c0 = (Fraction(c) for c in self.qexp)
        half = Fraction(p * step, 2)
        return TermSumSpec(
            self.start, self.numerators, self.denominators, self.shifted,
            (self.sign + p) % 2, (c2 + half, c1 - half, c0), self.base, self.factors,
            self.inner, (0, 1), self.scale, self.stop)

    def q_exponent(self, n: int) -> int:
        c2, c1, c0 = (Fraction(c) for c in self.qexp)
        e = c2 * n * n + c1 * n + c0
        if e.denominator != 1:
            raise NonIntegerExponentError(f"q-exponent {e} at n={n}")
        return int(e)

    def is_parametric(self) -> bool:
        mons = [t.x for t in self.numerators + self.denominators + self.shifted]
        mons += [f.m for f in self.factors] + [self.base]
        return any(m.has_params for m in mons)


def substitute_spec(spec: TermSumSpec, sub_a: Monomial, sub_b: Monomial) -> TermSumSpec:
    """Replace the parameters ``a``, ``b`` by monomials throughout ``spec``."""
    def sub(m):
        return m.substitute(sub_a, sub_b)
    return replace(
        spec,
        numerators=tuple(replace(t, x=sub(t.x)) for t in spec.numerators),
        denominators=tuple(replace(t, x=sub(t.x)) for t in spec.denominators),
        shifted=tuple(replace(t, x=sub(t.x)) for t in spec.shifted),
        factors=tuple(replace(f, m=sub(f.m)) for f in spec.factors),
        base=sub(spec.base),
    )


def phi_spec(numerators: Sequence[Monomial], denominators: Sequence[Monomial], z: Monomial,
             step: int = 1, **extra) -> TermSumSpec:
    """Standard r-phi-s in base ``q^step`` with argument ``z``."""
    r, s = len(numerators), len(denominators)
    return TermSumSpec(
        numerators=tuple(TermPoch(x, 0, step) for x in numerators),
        denominators=(TermPoch(ONE, step, step),) + tuple(TermPoch(x, 0, step) for x in denominators),
        base=z,
        phi_sign_power=(1 + s - r, step),
        **extra,
    )


# -- valuation bounds -------------------------------------------------------


def _poch_neg_weight(tp: TermPoch, count: int, weights) -> int:
    """Sum of the negative lowest weights among the first ``count`` factors."""
    if count <= 0 or tp.x.is_zero:
        return 0
    w0 = tp.factor(0).weight(weights)
    if w0 >= 0:
        return 0
    d = tp.step * weights[0]
    k = min(count, -(w0 // d) if (-w0) % d == 0 else -w0 // d + 1)
    return k * w0 + d * k * (k - 1) // 2


def _shifted_min_weight(sf: ShiftedFactor, count: int, weights) -> int:
    wq = weights[0]
    total = 0
    wx = None if sf.x.is_zero else sf.x.weight(weights)
    for k in range(count):
        e = wq * (sf.start + k * sf.step)
        if wx is not None and wx <= e:
            # every later factor also contributes min(wx, larger) = wx
            total += wx * (count - k)
            break
        total += e
    return total


def _factor_min_weight(bf: BinomialFactor, n: int, weights) -> int:
    m = bf.at(n)
    if m.is_zero:
        return 0
    w = m.weight(weights)
    if bf.power > 0:
        return min(0, w)
    return max(0, -w)


class _TermBuilder:
    def __init__(self, spec: TermSumSpec, order: int, weights, parametric: bool):
        self.spec = spec.folded()
        self.order = order
        self.weights = weights
        self.parametric = parametric
        self.P: Optional[TruncatedSeries] = None
        self.P_n: Optional[int] = None

    def counts(self, n):
        s = self.spec
        out = []
        for group in (s.numerators, s.denominators, s.shifted):
            cs = [_lin(t.count, n) for t in group]
            if any(c < 0 for c in cs):
                raise ValueError(f"negative Pochhammer count at n={n}")
            out.append(cs)
        return out

    def monomial(self, n: int) -> Monomial:
        s = self.spec
        m = Monomial(-1 if (s.sign and n % 2) else 1, s.q_exponent(n))
        if n:
            m = m * (s.base ** n)
        return m * s.scale

    def p_bound(self, n) -> int:
        """Lower bound for the min weight of the Pochhammer/shifted part."""
        s = self.spec
        nc, _, sc = self.counts(n)
        v = sum(_poch_neg_weight(t, c, self.weights) for t, c in zip(s.numerators, nc))
        v += sum(_shifted_min_weight(t, c, self.weights) for t, c in zip(s.shifted, sc))
        return v

    def rest_bound(self, n) -> Optional[int]:
        s = self.spec
        v = sum(_factor_min_weight(f, n, self.weights) for f in s.factors)
        if s.inner is not None:
            e = s.inner.min_exponent(n)
            if e is None:
                return None
            v += self.weights[0] * e
        return v

    def valuation_bound(self, n) -> Optional[int]:
        rb = self.rest_bound(n)
        if rb is None:
            return None
        m = self.monomial(n)
        if m.is_zero:
            return None
        return m.weight(self.weights) + self.p_bound(n) + rb

    def _build_p(self, n, target) -> TruncatedSeries:
        s = self.spec
        nc, dc, sc = self.counts(n)
        start = target - min(self.p_bound(n), 0)
        P = TruncatedSeries.one(start, self.weights, parametric=self.parametric)
        for t, c in zip(s.shifted, sc):
            P = mul_shifted(P, t.x, t.start, t.step, c)
        for t, c in zip(s.numerators, nc):
            for k in range(c):
                P = P.mul_binomial(t.factor(k))
        for t, c in zip(s.denominators, dc):
            for k in range(c):
                P = P.div_binomial(t.factor(k))
        return P

    def _advance_p(self, n, target) -> TruncatedSeries:
        s = self.spec
        P = self.P.truncate(max(target - min(self.p_bound(n), 0), 1))
        nc0, dc0, sc0 = self.counts(self.P_n)
        nc, dc, sc = self.counts(n)
        for t, a, b in zip(s.shifted, sc0, sc):
            if b < a:
                return self._build_p(n, target)
            for k in range(a, b):
                P = mul_shifted(P, t.x, t.start + k * t.step, t.step, 1)
        for t, a, b in zip(s.numerators, nc0, nc):
            if b < a:
                return self._build_p(n, target)
            for k in range(a, b):
                P = P.mul_binomial(t.factor(k))
        for t, a, b in zip(s.denominators, dc0, dc):
            if b < a:
                return self._build_p(n, target)
            for k in range(a, b):
                P = P.div_binomial(t.factor(k))
        return P

    def term(self, n: int) -> TruncatedSeries:
        s = self.spec
        m = self.monomial(n)
        target = self.order - m.weight(self.weights)
        rb = self.rest_bound(n) or 0
        need_p = target - min(rb, 0)
        if self.P is None or self.P_n is None or self.P_n > n:
            P = self._build_p(n, need_p)
        else:
            P = self._advance_p(n, need_p)
            if P.order < need_p:
                P = self._build_p(n, need_p)
        self.P, self.P_n = P, n
        pb = min(P.min_weight or 0, 0)
        rest_order = target - pb
        R = TruncatedSeries.one(rest_order, self.weights, parametric=self.parametric)
        for f in s.factors:
            mm = f.at(n)
            R = R.mul_binomial(mm) if f.power > 0 else R.div_binomial(mm)
        if s.inner is not None:
            R = R * s.inner.series(n, rest_order - min(R.min_weight or 0, 0), self.weights)
        T = (P.truncate(max(need_p, 1)) * R).mul_monomial(m)
        return T.truncate(self.order)


def build_term_sum(spec: TermSumSpec, order: int, weights=DEFAULT_WEIGHTS,
                   parametric: Optional[bool] = None) -> TruncatedSeries:
    """Expand ``sum_{n >= start} term(n)`` below weighted ``order``.

    Summation stops once the analytic lower bound of the term weight has been
    at least ``order`` and strictly increasing for ``LOOKAHEAD`` terms.  If
    the bound fails to increase for ``LOOKAHEAD`` consecutive terms while
    still below ``order`` the spec is rejected as divergent.
    """
    if parametric is None:
        parametric = spec.is_parametric()
    tb = _TermBuilder(spec, order, weights, parametric)
    s = tb.spec
    for n in range(s.start, s.start + 3):
        s.q_exponent(n)
    acc = TruncatedSeries.zero(order, weights, parametric)
    settled = 0
    flat = 0
    prev = None
    n = s.start
    while s.stop is None or n <= s.stop:
        v = tb.valuation_bound(n)
        if v is not None and v < order:
            acc = acc + tb.term(n)
        rising = v is None or prev is None or v > prev
        flat = 0 if rising else flat + 1
        settled = settled + 1 if (rising and (v is None or v >= order)) else 0
        if s.stop is None:
            if settled >= LOOKAHEAD:
                break
            if flat >= LOOKAHEAD:
                raise DivergentSpecError(f"term weight stopped increasing near n={n}")
        if v is not None:
            prev = v
        n += 1
    return acc.truncate(order)


# -- exact rational functions of q ------------------------------------------


def _poly_mul(p: dict, r: dict) -> dict:
    out: dict = {}
    for e1, c1 in p.items():
        for e2, c2 in r.items():
            e = e1 + e2
            out[e] = out.get(e, 0) + c1 * c2
    return {e: c for e, c in out.items() if c}


def _poly_mul_binomial(p: dict, c: Fraction, k: int) -> dict:
    """``p * (1 - c q^k)``."""
    out = dict(p)
    for e, v in p.items():
        out[e + k] = out.get(e + k, 0) - c * v
    return {e: v for e, v in out.items() if v}


class RationalQ:
    """Exact ``N(q) / prod (1 - c q^k)^m`` with ``k >= 1``.

    ``num`` is a Laurent polynomial ``{exponent: Fraction}``; ``den`` is a
    Counter of ``(c, k)`` binomials.  Values are immutable.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=None, den=None):
        self.num = {e: as_rational(c) for e, c in (num or {}).items() if c}
        self.den = Counter({k: m for k, m in (den or {}).items() if m})

    @classmethod
    def monomial(cls, c=1, e=0) -> "RationalQ":
        return cls({e: Fraction(c)})

    @classmethod
    def from_monomial(cls, m: Monomial) -> "RationalQ":
        if m.has_params:
            raise TypeError("RationalQ holds univariate values only")
        return cls({m.e_q: m.coeff})

    @classmethod
    def poly(cls, coeffs: dict) -> "RationalQ":
        return cls(coeffs)

    def is_zero(self) -> bool:
        return not self.num

    def mul_binomial(self, m: Monomial) -> "RationalQ":
        """``self * (1 - m)``."""
        if m.has_params:
            raise TypeError("univariate monomial expected")
        if m.is_zero:
            return self
        c, k = m.coeff, m.e_q
        if k == 0:
            return self.scale(1 - c)
        num, den = self.num, Counter(self.den)
        if k < 0:
            num = _poly_mul(num, {k: -c})
            c, k = 1 / c, -k
        if den.get((c, k)):
            den[(c, k)] -= 1
            return RationalQ(num, den)
        return RationalQ(_poly_mul_binomial(num, c, k), den)

    def div_binomial(self, m: Monomial) -> "RationalQ":
        """``self / (1 - m)``."""
        if m.has_params:
            raise TypeError("univariate monomial expected")
        if m.is_zero:
            return self
        c, k = m.coeff, m.e_q
        if k == 0:
            if c == 1:
                raise PoleError("division by the vanishing factor (1 - 1)")
            return self.scale(1 / (1 - c))
        num, den = self.num, Counter(self.den)
        if k < 0:
            num = _poly_mul(num, {-k: -1 / c})
            c, k = 1 / c, -k
        den[(c, k)] += 1
        return RationalQ(num, den)

    def scale(self, c) -> "RationalQ":
        c = as_rational(c)
        return RationalQ({e: v * c for e, v in self.num.items()}, self.den)

    def mul_monomial(self, m: Monomial) -> "RationalQ":
        if m.has_params:
            raise TypeError("univariate monomial expected")
        return RationalQ({e + m.e_q: v * m.coeff for e, v in self.num.items()}, self.den)

    def __mul__(self, other: "RationalQ") -> "RationalQ":
        if isinstance(other, Monomial):
            return self.mul_monomial(other)
        if not isinstance(other, RationalQ):
            return self.scale(other)
        num = _poly_mul(self.num, other.num)
        den = Counter(self.den)
        for key, m in other.den.items():
            den[key] += m
        return RationalQ(num, den)._cancel()

    __rmul__ = __mul__

    def _cancel(self) -> "RationalQ":
        # cheap cancellation: divide out binomials that exactly divide num
        if not self.num:
            return RationalQ()
        num, den = self.num, Counter(self.den)
        for (c, k), m in list(den.items()):
            while m:
                q = _poly_div_binomial(num, c, k)
                if q is None:
                    break
                num, m = q, m - 1
            den[(c, k)] = m
        return RationalQ(num, den)

    def _over(self, den: Counter) -> dict:
        """Numerator over the (larger) denominator ``den``."""
        num = self.num
        for key, m in den.items():
            for _ in range(m - self.den.get(key, 0)):
                num = _poly_mul_binomial(num, key[0], key[1])
        return num

    def __add__(self, other: "RationalQ") -> "RationalQ":
        if not isinstance(other, RationalQ):
            other = RationalQ.monomial(other)
        if not self.num:
            return other
        if not other.num:
            return self
        den = self.den | other.den
        n1, n2 = self._over(den), other._over(den)
        out = dict(n1)
        for e, v in n2.items():
            out[e] = out.get(e, 0) + v
        return RationalQ(out, den)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, RationalQ):
            return NotImplemented
        den = self.den | other.den
        return self._over(den) == other._over(den)

    def __hash__(self):
        raise TypeError("RationalQ is not hashable")

    def valuation(self) -> Optional[int]:
        return min(self.num) if self.num else None

    def series(self, order: int, weights=DEFAULT_WEIGHTS) -> TruncatedSeries:
        """Expansion below q-exponent ``order`` (univariate)."""
        if not self.num:
            return TruncatedSeries.zero(order, weights)
        terms = {(e, 0, 0): c for e, c in self.num.items() if e < order}
        s = TruncatedSeries.from_terms(terms, order, weights, parametric=False) if terms \
            else TruncatedSeries.zero(order, weights)
        for (c, k), m in sorted(self.den.items()):
            for _ in range(m):
                s = s.div_binomial(Monomial(c, k))
        return s

    def __repr__(self):
        return f"RationalQ(num={dict(sorted(self.num.items()))}, den={dict(self.den)})"


def _poly_div_binomial(num: dict, c: Fraction, k: int) -> Optional[dict]:
    """Exact quotient ``num / (1 - c q^k)`` or None if not divisible."""
    if not num:
        return {}
    items = dict(num)
    out: dict = {}
    lo = min(items)
    hi = max(items)
    # synthetic division from the low end: out[e] = num[e] + c*out[e-k]
    for e in range(lo, hi - k + 1):
        v = items.get(e, 0) + c * out.get(e - k, 0)
        if v:
            out[e] = v
    for e in range(hi - k + 1, hi + 1):
        if items.get(e, 0) + c * out.get(e - k, 0):
            return None
    return out


def rq_poch(x: Monomial, step: int, count: int) -> RationalQ:
    """``(x; q^step)_count`` as an exact value; negative counts allowed."""
    r = RationalQ.monomial(1)
    if count >= 0:
        for k in range(count):
            r = r.mul_binomial(x.qshift(k * step))
    else:
        for k in range(1, -count + 1):
            r = r.div_binomial(x.qshift(-k * step))
    return r


# -- terminating r-phi-s -------------------------------------------------------


@dataclass(frozen=True)
class FinitePhiSpec:
    """Terminating r-phi-s in base ``q^step`` summed over ``0 <= j <= n``.

    Parameters are univariate monomials; one numerator is expected to be
    ``q^(-step*n)``, which makes every term beyond ``j = n`` vanish.
    """

    n: int
    numerators: tuple
    denominators: tuple
    z: Monomial
    step: int = 1

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("n must be nonnegative")


def finite_phi_terms(spec: FinitePhiSpec) -> list:
    """The ``n + 1`` summands of the terminating sum, each a pure product."""
    r, s = len(spec.numerators), len(spec.denominators)
    p = 1 + s - r
    out = []
    term = RationalQ.monomial(1)
    for j in range(spec.n + 1):
        if j:
            ratio = RationalQ.monomial(1)
            for x in spec.numerators:
                ratio = ratio.mul_binomial(x.qshift((j - 1) * spec.step))
            for x in (Monomial(1, spec.step),) + tuple(spec.denominators):
                ratio = ratio.div_binomial(x.qshift((j - 1) * spec.step))
            mono = spec.z * Monomial(-1 if p % 2 else 1, spec.step * (j - 1) * p)
            term = (term * ratio).mul_monomial(mono)
        out.append(term)
    return out


def finite_phi(spec: FinitePhiSpec) -> RationalQ:
    """Exact value of the terminating sum as a :class:`RationalQ`.

    Use ``.series(order)`` on the result for a truncated expansion.
    """
    total = RationalQ()
    for t in finite_phi_terms(spec):
        total = total + t
    return total


def theta_partial(lo: int, hi: int, quad=(1, 0), sign: int = 0) -> RationalQ:
    """``sum_{j=lo}^{hi} (-1)^(sign*j) q^(c2 j^2 + c1 j)`` exactly."""
    num: dict = {}
    for j in range(lo, hi + 1):
        e = Fraction(quad[0]) * j * j + Fraction(quad[1]) * j
        if e.denominator != 1:
            raise NonIntegerExponentError(f"exponent {e} at j={j}")
        c = -1 if (sign and j % 2) else 1
        num[int(e)] = num.get(int(e), 0) + c
    return RationalQ(num)
