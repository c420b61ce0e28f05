"""Truncated formal series in q over Q or Q[a^±1, b^±1].

A series is exact for every monomial ``q^e a^i b^j`` whose weight
``wq*e + wa*i + wb*j`` is below ``order``.  Storage is one dense integer
slice per parameter degree ``(i, j)`` plus a single common denominator, so
the inner loops are integer-only and run through :mod:`heckeq.kernels`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from . import kernels
from .ring import (
    DEFAULT_WEIGHTS,
    Monomial,
    NotAUnitError,
    ONE,
    ParamPolynomial,
    as_rational,
)

Slices = dict  # (i, j) -> (lo, list[int])


class WeightMismatchError(ValueError):
    pass


class OutOfOrderError(IndexError):
    pass


class PoleError(ZeroDivisionError):
    """Division by a factor that vanishes identically."""


class NonTerminatingError(ValueError):
    pass


class SpecializationError(ValueError):
    pass


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _hi(key, order, weights) -> int:
    wq, wa, wb = weights
    return _ceil_div(order - wa * key[0] - wb * key[1], wq)


def _normalize(raw: dict, den, order: int, weights) -> tuple[int, dict]:
    """Truncate, trim, clear Fractions and reduce by the content gcd."""
    den = as_rational(den)
    scale = den.denominator
    num_den = den.numerator
    frac_dens = 1
    has_frac = False
    for lo, cs in raw.values():
        for c in cs:
            if type(c) is not int:
                has_frac = True
                d = Fraction(c).denominator
                if d != 1:
                    frac_dens = math.lcm(frac_dens, d)
    out = {}
    for key, (lo, cs) in raw.items():
        hi = _hi(key, order, weights)
        n = hi - lo
        if n <= 0:
            continue
        cs = cs[:n]
        start = 0
        while start < len(cs) and not cs[start]:
            start += 1
        stop = len(cs)
        while stop > start and not cs[stop - 1]:
            stop -= 1
        if start == stop:
            continue
        cs = cs[start:stop]
        if has_frac:
            cs = [int(Fraction(c) * frac_dens * scale) for c in cs]
        elif scale != 1:
            cs = [c * scale for c in cs]
        out[key] = (lo + start, cs)
    den_out = num_den * frac_dens
    if den_out < 0:
        den_out = -den_out
        out = {k: (lo, [-c for c in cs]) for k, (lo, cs) in out.items()}
    if den_out == 0:
        raise ZeroDivisionError("zero denominator")
    if not out:
        return 1, {}
    g = den_out
    for lo, cs in out.values():
        g = math.gcd(g, *cs)
        if g == 1:
            break
    if g != 1:
        out = {k: (lo, [c // g for c in cs]) for k, (lo, cs) in out.items()}
        den_out //= g
    return den_out, out


class TruncatedSeries:
    """Immutable truncated series; see module docstring for the layout."""

    __slots__ = ("order", "weights", "den", "_slices", "parametric")

    def __init__(self, slices: Slices, order: int, weights=DEFAULT_WEIGHTS, den=1,
                 parametric: Optional[bool] = None, _normalized: bool = False):
        weights = tuple(int(w) for w in weights)
        if len(weights) != 3 or min(weights) <= 0:
            raise ValueError(f"weights must be three positive integers, got {weights}")
        self.order = int(order)
        self.weights = weights
        if _normalized:
            self.den, self._slices = den, slices
        else:
            self.den, self._slices = _normalize(slices, den, self.order, weights)
        if parametric is None:
            parametric = any(k != (0, 0) for k in self._slices)
        self.parametric = bool(parametric)

    # construction -------------------------------------------------------

    @classmethod
    def zero(cls, order, weights=DEFAULT_WEIGHTS, parametric=False):
        return cls({}, order, weights, parametric=parametric, _normalized=True)

    @classmethod
    def one(cls, order, weights=DEFAULT_WEIGHTS, parametric=False):
        return cls.monomial(ONE, order, weights, parametric)

    @classmethod
    def monomial(cls, m: Monomial, order, weights=DEFAULT_WEIGHTS, parametric=None):
        if parametric is None:
            parametric = m.has_params
        if m.is_zero:
            return cls.zero(order, weights, parametric)
        c = m.coeff
        return cls({(m.e_a, m.e_b): (m.e_q, [c.numerator])}, order, weights,
                   den=c.denominator, parametric=parametric)

    @classmethod
    def from_coeffs(cls, coeffs, order, lo=0, weights=DEFAULT_WEIGHTS):
        return cls({(0, 0): (lo, list(coeffs))}, order, weights, parametric=False)

    @classmethod
    def from_terms(cls, terms: dict, order, weights=DEFAULT_WEIGHTS, parametric=None):
        """Build from ``{(e_q, deg_a, deg_b): coefficient}``."""
        grouped: dict = {}
        for (e, i, j), c in terms.items():
            grouped.setdefault((i, j), {})[e] = as_rational(c)
        raw = {}
        for key, d in grouped.items():
            lo, hi = min(d), max(d)
            cs = [d.get(e, 0) for e in range(lo, hi + 1)]
            raw[key] = (lo, cs)
        if parametric is None:
            parametric = any(k != (0, 0) for k in raw)
        return cls(raw, order, weights, parametric=parametric)

    # inspection ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._slices

    @property
    def floor(self) -> int:
        if not self._slices:
            return 0
        return min(lo for lo, _ in self._slices.values())

    @property
    def min_weight(self) -> Optional[int]:
        if not self._slices:
            return None
        wq, wa, wb = self.weights
        return min(wq * lo + wa * i + wb * j for (i, j), (lo, _) in self._slices.items())

    def slices(self) -> Iterator[tuple[tuple[int, int], int, list]]:
        for key in sorted(self._slices):
            lo, cs = self._slices[key]
            yield key, lo, cs

    def terms(self) -> Iterator[tuple[int, int, int, Fraction]]:
        """Nonzero ``(e_q, deg_a, deg_b, coeff)`` sorted by q-exponent then degrees."""
        out = []
        for (i, j), (lo, cs) in self._slices.items():
            for k, c in enumerate(cs):
                if c:
                    out.append((lo + k, i, j, Fraction(c, self.den)))
        out.sort()
        return iter(out)

    def term_count(self) -> int:
        return sum(1 for _, _, cs in self.slices() for c in cs if c)

    def coefficient(self, e: int):
        """Coefficient of ``q^e``: a Fraction, or a ParamPolynomial if parametric."""
        if self.weights[0] * e >= self.order:
            raise OutOfOrderError(f"q^{e} is beyond truncation order {self.order}")
        if not self.parametric:
            sl = self._slices.get((0, 0))
            if sl is None:
                return Fraction(0)
            lo, cs = sl
            k = e - lo
            return Fraction(cs[k], self.den) if 0 <= k < len(cs) else Fraction(0)
        terms = {}
        for key, (lo, cs) in self._slices.items():
            k = e - lo
            if 0 <= k < len(cs) and cs[k]:
                terms[key] = Fraction(cs[k], self.den)
        return ParamPolynomial(terms, self.weights[1:])

    def coeffs(self, start: int = 0, stop: Optional[int] = None) -> list[Fraction]:
        """Univariate coefficients for ``start <= e < stop`` (default: up to order)."""
        if self.parametric:
            raise TypeError("coeffs() is for univariate series")
        if stop is None:
            stop = _hi((0, 0), self.order, self.weights)
        return [self.coefficient(e) for e in range(start, stop)]

    def int_coeffs(self, start: int = 0, stop: Optional[int] = None) -> list[int]:
        if self.den != 1:
            raise ValueError(f"series has denominator {self.den}")
        if stop is None:
            stop = _hi((0, 0), self.order, self.weights)
        sl = self._slices.get((0, 0))
        out = [0] * max(stop - start, 0)
        if sl is not None and not self.parametric:
            lo, cs = sl
            for k, c in enumerate(cs):
                e = lo + k
                if start <= e < stop:
                    out[e - start] = c
        elif self.parametric:
            raise TypeError("int_coeffs() is for univariate series")
        return out

    # arithmetic ---------------------------------------------------------

    def _check(self, other: "TruncatedSeries"):
        if not isinstance(other, TruncatedSeries):
            raise TypeError(f"expected TruncatedSeries, got {type(other).__name__}")
        if other.weights != self.weights:
            raise WeightMismatchError(f"weights {self.weights} != {other.weights}")

    def _wrap(self, raw, den, order, parametric) -> "TruncatedSeries":
        return TruncatedSeries(raw, order, self.weights, den=den, parametric=parametric)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order >= self.order:
            return self
        return self._wrap(dict(self._slices), self.den, order, self.parametric)

    def __neg__(self):
        raw = {k: (lo, [-c for c in cs]) for k, (lo, cs) in self._slices.items()}
        return TruncatedSeries(raw, self.order, self.weights, self.den, self.parametric, _normalized=True)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TruncatedSeries.monomial(Monomial(other), self.order, self.weights)
        elif isinstance(other, Monomial):
            other = TruncatedSeries.monomial(other, self.order, self.weights)
        self._check(other)
        order = min(self.order, other.order)
        L = math.lcm(self.den, other.den)
        fs, fo = L // self.den, L // other.den
        raw: dict = {}
        for src, f in ((self, fs), (other, fo)):
            for key, (lo, cs) in src._slices.items():
                hi = _hi(key, order, self.weights)
                if hi <= lo:
                    continue
                cur = raw.get(key)
                if cur is None:
                    raw[key] = (lo, [c * f for c in cs[: hi - lo]] if f != 1 else list(cs[: hi - lo]))
                    continue
                clo, ccs = cur
                nlo = min(lo, clo)
                nhi = min(hi, max(lo + len(cs), clo + len(ccs)))
                buf = [0] * (nhi - nlo)
                for k, c in enumerate(ccs):
                    if clo + k < nhi:
                        buf[clo + k - nlo] = c
                kernels.shift_axpy(buf, cs, f, lo - nlo)
                raw[key] = (nlo, buf)
        return self._wrap(raw, L, order, self.parametric or other.parametric)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, Monomial):
            return self.mul_monomial(other)
        self._check(other)
        # (s + O(W1)) * (t + O(W2)) is known below min(W1 + val t, W2 + val s)
        vs, vo = self.min_weight, other.min_weight
        vs = self.order if vs is None else vs
        vo = other.order if vo is None else vo
        order = min(self.order + vo, other.order + vs)
        acc: dict = {}
        for k1, (lo1, c1) in self._slices.items():
            for k2, (lo2, c2) in other._slices.items():
                key = (k1[0] + k2[0], k1[1] + k2[1])
                lo = lo1 + lo2
                n = _hi(key, order, self.weights) - lo
                if n <= 0:
                    continue
                prod = kernels.conv(c1, c2, n)
                cur = acc.get(key)
                if cur is None:
                    acc[key] = (lo, prod)
                    continue
                clo, ccs = cur
                nlo = min(lo, clo)
                nhi = max(lo + len(prod), clo + len(ccs))
                if nlo == clo and nhi == clo + len(ccs):
                    kernels.shift_axpy(ccs, prod, 1, lo - clo)
                else:
                    buf = [0] * (nhi - nlo)
                    kernels.shift_axpy(buf, ccs, 1, clo - nlo)
                    kernels.shift_axpy(buf, prod, 1, lo - nlo)
                    acc[key] = (nlo, buf)
        return self._wrap(acc, self.den * other.den, order, self.parametric or other.parametric)

    __rmul__ = __mul__

    def scale(self, c) -> "TruncatedSeries":
        c = as_rational(c)
        if not c:
            return TruncatedSeries.zero(self.order, self.weights, self.parametric)
        raw = {k: (lo, [x * c.numerator for x in cs]) for k, (lo, cs) in self._slices.items()}
        return self._wrap(raw, self.den * c.denominator, self.order, self.parametric)

    def mul_monomial(self, m: Monomial) -> "TruncatedSeries":
        """Multiply by a monomial; exactness order moves with its weight."""
        parametric = self.parametric or m.has_params
        if m.is_zero:
            return TruncatedSeries.zero(self.order, self.weights, parametric)
        order = self.order + m.weight(self.weights)
        c = m.coeff
        raw = {}
        for (i, j), (lo, cs) in self._slices.items():
            raw[(i + m.e_a, j + m.e_b)] = (lo + m.e_q, cs if c.numerator == 1 else [x * c.numerator for x in cs])
        if c.denominator == 1 and c.numerator == 1:
            return TruncatedSeries(raw, order, self.weights, self.den, parametric, _normalized=True)
        return self._wrap(raw, self.den * c.denominator, order, parametric)

    def mul_binomial(self, m: Monomial) -> "TruncatedSeries":
        """``self * (1 - m)``."""
        if m.is_zero:
            return self
        return self - self.mul_monomial(m)

    def div_binomial(self, m: Monomial) -> "TruncatedSeries":
        """``self / (1 - m)`` as a formal series in positive weight."""
        if m.is_zero:
            return self
        w = m.weight(self.weights)
        if w == 0:
            if not m.is_constant:
                raise NotAUnitError(f"1 - {m} has no single lowest-weight term")
            if m.coeff == 1:
                raise PoleError("division by the vanishing factor (1 - 1)")
            return self.scale(1 / (1 - m.coeff))
        if w < 0:
            inv = m.inverse()
            return self.div_binomial(inv).mul_monomial(-inv)
        parametric = self.parametric or m.has_params
        c = m.coeff
        cc = c.numerator if c.denominator == 1 else c
        if not m.has_params:
            raw = {}
            for key, (lo, cs) in self._slices.items():
                n = _hi(key, self.order, self.weights) - lo
                raw[key] = (lo, kernels.geom_div(cs, cc, m.e_q, n))
            return self._wrap(raw, self.den, self.order, parametric)
        di, dj, dk = m.e_a, m.e_b, m.e_q
        keys = set()
        for key, (lo, _) in self._slices.items():
            t = 0
            k = key
            while _hi(k, self.order, self.weights) > lo + t * dk:
                keys.add(k)
                t += 1
                k = (key[0] + t * di, key[1] + t * dj)
        y: dict = {}
        for key in sorted(keys, key=lambda k: k[0] * di + k[1] * dj):
            hi = _hi(key, self.order, self.weights)
            base = self._slices.get(key)
            pred = y.get((key[0] - di, key[1] - dj))
            los = []
            if base is not None:
                los.append(base[0])
            if pred is not None:
                los.append(pred[0] + dk)
            if not los:
                continue
            lo = min(los)
            if hi <= lo:
                continue
            buf = [0] * (hi - lo)
            if base is not None:
                kernels.shift_axpy(buf, base[1], 1, base[0] - lo)
            if pred is not None:
                kernels.shift_axpy(buf, pred[1], cc, pred[0] + dk - lo)
            y[key] = (lo, buf)
        return self._wrap(y, self.den, self.order, parametric)

    def lowest_monomial(self) -> Monomial:
        """The unique lowest-weight term; raises if it is not unique."""
        if not self._slices:
            raise NotAUnitError("zero series is not invertible")
        wq, wa, wb = self.weights
        best = None
        for (i, j), (lo, cs) in self._slices.items():
            for k, c in enumerate(cs):
                if c:
                    w = wq * (lo + k) + wa * i + wb * j
                    if best is None or w < best[0]:
                        best = (w, [(lo + k, i, j, c)])
                    elif w == best[0]:
                        best[1].append((lo + k, i, j, c))
                    break
        if len(best[1]) != 1:
            raise NotAUnitError("lowest-weight part is not a single monomial")
        e, i, j, c = best[1][0]
        return Monomial(Fraction(c, self.den), e, i, j)

    def invert(self) -> "TruncatedSeries":
        m = self.lowest_monomial()
        w = m.weight(self.weights)
        minv = m.inverse()
        u = self.mul_monomial(minv)  # 1 + higher weight, exact below order - w
        target = u.order
        if u._slices.keys() <= {(0, 0)}:
            # u = cs/den with cs[0] == den, so 1/u = inv(cs/cs[0])
            lo, cs = u._slices[(0, 0)]
            n = _hi((0, 0), target, self.weights)
            if u.den == 1:
                inv = kernels.inv_unit(cs, n)
            else:
                inv = kernels.inv_unit([Fraction(c, cs[0]) for c in cs], n)
            inv_u = TruncatedSeries({(0, 0): (0, inv)}, target, self.weights, parametric=self.parametric)
            return inv_u.mul_monomial(minv)
        # Newton iteration y <- y (2 - u y); the correct weight doubles each pass
        good = min(_positive_weights(u), default=target)
        y = TruncatedSeries.one(target, self.weights, parametric=True)
        two = TruncatedSeries.monomial(Monomial(2), target, self.weights)
        while good < target:
            y = (y * (two - u * y)).truncate(target)
            good *= 2
        return y.mul_monomial(minv)

    def negate_q(self) -> "TruncatedSeries":
        """Image under ``q -> -q``."""
        raw = {}
        for key, (lo, cs) in self._slices.items():
            raw[key] = (lo, [(-c if (lo + k) % 2 else c) for k, c in enumerate(cs)])
        return TruncatedSeries(raw, self.order, self.weights, self.den, self.parametric, _normalized=True)

    def dilate_q(self, k: int) -> "TruncatedSeries":
        """Image under ``q -> q^k`` (univariate only)."""
        if self.parametric:
            raise TypeError("dilate_q is for univariate series")
        if k < 1:
            raise ValueError("dilation must be positive")
        raw = {}
        for key, (lo, cs) in self._slices.items():
            buf = [0] * ((len(cs) - 1) * k + 1)
            buf[::k] = cs
            raw[key] = (lo * k, buf)
        return self._wrap(raw, self.den, self.order * k, False)

    # comparison ---------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.order == other.order and self.weights == other.weights
                and self.den == other.den and self._slices == other._slices)

    def __hash__(self):
        return hash((self.order, self.weights, self.den, tuple(sorted(self.terms()))))

    def agrees_with(self, other: "TruncatedSeries") -> bool:
        return self.first_difference(other) is None

    def first_difference(self, other: "TruncatedSeries"):
        """First monomial, in (weight, e_q, deg_a, deg_b) order, where the two differ.

        Compared below the smaller order.  Returns ``None`` or a tuple
        ``(e_q, deg_a, deg_b, self_coeff, other_coeff)``.
        """
        self._check(other)
        order = min(self.order, other.order)
        diff = self.truncate(order) - other.truncate(order)
        if diff.is_zero():
            return None
        wq, wa, wb = self.weights
        best = None
        for (i, j), (lo, cs) in diff._slices.items():
            k = next(k for k, c in enumerate(cs) if c)
            e = lo + k
            cand = (wq * e + wa * i + wb * j, e, i, j)
            if best is None or cand < best:
                best = cand
        _, e, i, j = best
        return e, i, j, self._coeff_at(e, i, j), other._coeff_at(e, i, j)

    def _coeff_at(self, e, i, j) -> Fraction:
        sl = self._slices.get((i, j))
        if sl is None:
            return Fraction(0)
        lo, cs = sl
        k = e - lo
        return Fraction(cs[k], self.den) if 0 <= k < len(cs) else Fraction(0)

    # specialization -----------------------------------------------------

    def safe_specialization_order(self, sub_a: Monomial, sub_b: Monomial) -> int:
        """Largest univariate order that substitution can certify.

        Every unseen monomial has weight >= order; with nonnegative degrees
        and substitution exponents >= 1 its image exponent is at least
        ``rho * order`` with ``rho = min(1/wq, s_a/wa, s_b/wb)``.
        """
        if not self.parametric:
            return self.order
        wq, wa, wb = self.weights
        if self.floor < 0 or any(i < 0 or j < 0 for i, j in self._slices):
            raise SpecializationError("certified specialization needs nonnegative degrees")
        ratios = [Fraction(1, wq)]
        for sub, w in ((sub_a, wa), (sub_b, wb)):
            if sub.is_zero:
                continue
            if sub.has_params or sub.e_q < 1:
                raise SpecializationError(f"cannot certify substitution by {sub}")
            ratios.append(Fraction(sub.e_q, w))
        return math.ceil(min(ratios) * self.order)

    def specialize(self, sub_a: Monomial, sub_b: Monomial, order: Optional[int] = None) -> "TruncatedSeries":
        """Substitute ``a -> sub_a``, ``b -> sub_b``; result is univariate.

        With ``order=None`` the result is truncated at the certified order
        (see :meth:`safe_specialization_order`).  An explicit ``order`` is
        taken on trust.
        """
        for (i, j) in self._slices:
            if (i < 0 and sub_a.is_zero) or (j < 0 and sub_b.is_zero):
                raise SpecializationError("zero substituted into a negative Laurent degree")
        if order is None:
            order = self.safe_specialization_order(sub_a, sub_b)
        wq = self.weights[0]
        raw: dict = {}
        extra_den = 1
        parts = []
        for (i, j), (lo, cs) in self._slices.items():
            img = Monomial(1)
            if i:
                img = img * (sub_a ** i)
            if j:
                img = img * (sub_b ** j)
            if img.is_zero:
                continue
            if img.has_params:
                raise SpecializationError("substitution must be free of a and b")
            parts.append((img, lo, cs))
            extra_den = math.lcm(extra_den, img.coeff.denominator)
        for img, lo, cs in parts:
            f = img.coeff * extra_den
            f = f.numerator
            nlo = lo + img.e_q
            hi = _ceil_div(order, wq)
            if hi <= nlo:
                continue
            cur = raw.get((0, 0))
            if cur is None:
                buf = [0] * (hi - nlo)
                kernels.shift_axpy(buf, cs, f, 0)
                raw[(0, 0)] = (nlo, buf)
                continue
            clo, ccs = cur
            nl = min(clo, nlo)
            buf = [0] * (hi - nl)
            kernels.shift_axpy(buf, ccs, 1, clo - nl)
            kernels.shift_axpy(buf, cs, f, nlo - nl)
            raw[(0, 0)] = (nl, buf)
        return TruncatedSeries(raw, order, self.weights, den=self.den * extra_den, parametric=False)

    # display ------------------------------------------------------------

    def __repr__(self):
        return f"TruncatedSeries({self.to_string(12)})"

    def to_string(self, max_terms: int = 20) -> str:
        parts = []
        for n, (e, i, j, c) in enumerate(self.terms()):
            if n >= max_terms:
                parts.append("...")
                break
            mono = Monomial(c, e, i, j)
            parts.append(str(mono))
        body = " + ".join(parts).replace("+ -", "- ") if parts else "0"
        return f"{body} + O(w^{self.order})" if self.parametric else f"{body} + O(q^{self.order})"


def _positive_weights(u: TruncatedSeries):
    wq, wa, wb = u.weights
    for (i, j), (lo, cs) in u._slices.items():
        for k, c in enumerate(cs):
            if c:
                w = wq * (lo + k) + wa * i + wb * j
                if w > 0:
                    yield w


# -- q-Pochhammer builders -------------------------------------------------


@dataclass(frozen=True)
class PochhammerArg:
    """``(x q^start; q^step)_count``; ``count=None`` means infinite."""

    x: Monomial
    start: int = 0
    step: int = 1
    count: Optional[int] = None

    def __post_init__(self):
        if self.step < 1:
            raise ValueError("step must be >= 1")
        if self.count is not None and self.count < 0:
            raise ValueError("count must be nonnegative")

    def factor(self, k: int) -> Monomial:
        return self.x.qshift(self.start + k * self.step)


def _factor_indices(arg: PochhammerArg, order: int, weights):
    if arg.x.is_zero:
        return range(0)
    if arg.count is not None:
        return range(arg.count)
    w0 = arg.factor(0).weight(weights)
    if w0 <= 0:
        raise NonTerminatingError(f"infinite product with non-positive first weight: {arg}")
    wq = weights[0]
    n = 0
    while w0 + n * arg.step * wq < order:
        n += 1
    return range(n)


def pochhammer(arg: PochhammerArg, order: int, weights=DEFAULT_WEIGHTS) -> TruncatedSeries:
    s = TruncatedSeries.one(order, weights, parametric=arg.x.has_params)
    for k in _factor_indices(arg, order, weights):
        s = s.mul_binomial(arg.factor(k))
    return s


def inverse_pochhammer(arg: PochhammerArg, order: int, weights=DEFAULT_WEIGHTS) -> TruncatedSeries:
    s = TruncatedSeries.one(order, weights, parametric=arg.x.has_params)
    for k in _factor_indices(arg, order, weights):
        s = s.div_binomial(arg.factor(k))
    return s


def shifted_pochhammer_poly(x: Monomial, start: int, step: int, n: int, order: int,
                            weights=DEFAULT_WEIGHTS) -> TruncatedSeries:
    """``prod_{k<n} (x - q^(start + k*step))``, i.e. ``(q^start/x; q^step)_n x^n``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    s = TruncatedSeries.one(order, weights, parametric=x.has_params)
    return mul_shifted(s, x, start, step, n)


def mul_shifted(s: TruncatedSeries, x: Monomial, start: int, step: int, n: int) -> TruncatedSeries:
    for k in range(n):
        qk = Monomial(-1, start + k * step)
        if x.is_zero:
            s = s.mul_monomial(qk)
        else:
            s = s.mul_monomial(x) + s.mul_monomial(qk)
    return s


# -- functional aliases ------------------------------------------------------


def series_add(s: TruncatedSeries, t: TruncatedSeries) -> TruncatedSeries:
    return s + t


def series_mul(s: TruncatedSeries, t: TruncatedSeries) -> TruncatedSeries:
    return s * t


def series_invert(s: TruncatedSeries) -> TruncatedSeries:
    return s.invert()


def coefficient(s: TruncatedSeries, e: int):
    return s.coefficient(e)


def specialize(s: TruncatedSeries, sub_a: Monomial, sub_b: Monomial, order: Optional[int] = None):
    return s.specialize(sub_a, sub_b, order)


def q_series(order: int, weights=DEFAULT_WEIGHTS) -> TruncatedSeries:
    """The series ``q``."""
    return TruncatedSeries.monomial(Monomial(1, 1), order, weights)
