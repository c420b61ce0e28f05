"""Composable series builders.

A builder is a declarative expression that expands to a
:class:`~heckeq.series.TruncatedSeries` at a requested order.  Leaves wrap
the sum specs of :mod:`heckeq.hypergeom` and :mod:`heckeq.hecke`, infinite
q-Pochhammer products and theta series; inner nodes add, multiply, scale and
replace ``q`` by ``-q``.  Every builder can substitute monomials for the
parameters ``a`` and ``b``, which is how parameterized identities are
specialized without going through a truncated two-parameter series.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from ..hecke import HeckeSpec, Kind, build_hecke, theta_sum
from ..hypergeom import RationalQ, TermSumSpec, build_term_sum, substitute_spec
from ..ring import ONE, Monomial
from ..series import PochhammerArg, TruncatedSeries, inverse_pochhammer, pochhammer


class Builder:
    """Base class; subclasses implement ``build`` and ``substitute``."""

    def build(self, order: int, weights, parametric: bool) -> TruncatedSeries:
        raise NotImplementedError

    def substitute(self, sub_a: Monomial, sub_b: Monomial) -> "Builder":
        return self

    @property
    def is_parametric(self) -> bool:
        return False

    def __add__(self, other):
        return Add((self, as_builder(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return Add((self, Scaled(Fraction(-1), as_builder(other))))

    def __rsub__(self, other):
        return Add((as_builder(other), Scaled(Fraction(-1), self)))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Scaled(Fraction(other), self)
        return Mul((self, as_builder(other)))

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Scaled(Fraction(other), self)
        return Mul((as_builder(other), self))

    def __neg__(self):
        return Scaled(Fraction(-1), self)


def as_builder(x) -> Builder:
    if isinstance(x, Builder):
        return x
    if isinstance(x, Monomial):
        return Mono(x)
    if isinstance(x, (int, Fraction)):
        return Mono(Monomial(Fraction(x)))
    raise TypeError(f"cannot use {x!r} as a builder")


@dataclass(frozen=True, eq=False)
class Mono(Builder):
    m: Monomial

    def build(self, order, weights, parametric):
        return TruncatedSeries.monomial(self.m, order, weights, parametric=parametric)

    def substitute(self, sub_a, sub_b):
        return Mono(self.m.substitute(sub_a, sub_b))

    @property
    def is_parametric(self):
        return self.m.has_params


@dataclass(frozen=True, eq=False)
class Sum(Builder):
    spec: TermSumSpec

    def build(self, order, weights, parametric):
        return build_term_sum(self.spec, order, weights, parametric=parametric)

    def substitute(self, sub_a, sub_b):
        return Sum(substitute_spec(self.spec, sub_a, sub_b))

    @property
    def is_parametric(self):
        return self.spec.is_parametric()


@dataclass(frozen=True, eq=False)
class Hecke(Builder):
    spec: HeckeSpec

    def build(self, order, weights, parametric):
        s = build_hecke(self.spec, order, weights)
        if parametric:
            s = s + TruncatedSeries.zero(order, weights, parametric=True)
        return s


@dataclass(frozen=True, eq=False)
class Theta(Builder):
    kind: Kind
    c: int = 1

    def build(self, order, weights, parametric):
        return theta_sum(self.kind, order, self.c, weights)


@dataclass(frozen=True, eq=False)
class Product(Builder):
    """``prod (x q^start; q^step)_inf ^ power`` over ``factors``."""

    factors: tuple  # of (Monomial x, start, step, power)

    def build(self, order, weights, parametric):
        s = TruncatedSeries.one(order, weights, parametric=parametric)
        for x, start, step, power in self.factors:
            arg = PochhammerArg(x, start, step)
            f = pochhammer if power > 0 else inverse_pochhammer
            for _ in range(abs(power)):
                s = s * f(arg, order, weights)
        return s

    def substitute(self, sub_a, sub_b):
        return Product(tuple((x.substitute(sub_a, sub_b), st, sp, pw)
                             for x, st, sp, pw in self.factors))

    @property
    def is_parametric(self):
        return any(x.has_params for x, *_ in self.factors)


@dataclass(frozen=True, eq=False)
class Rational(Builder):
    """A fixed rational function of ``q`` given as a :class:`RationalQ`."""

    value: RationalQ

    def build(self, order, weights, parametric):
        s = self.value.series(order, weights)
        if parametric:
            s = s + TruncatedSeries.zero(order, weights, parametric=True)
        return s


@dataclass(frozen=True, eq=False)
class Add(Builder):
    parts: tuple

    def build(self, order, weights, parametric):
        acc = TruncatedSeries.zero(order, weights, parametric=parametric)
        for p in self.parts:
            acc = acc + p.build(order, weights, parametric)
        return acc

    def substitute(self, sub_a, sub_b):
        return Add(tuple(p.substitute(sub_a, sub_b) for p in self.parts))

    @property
    def is_parametric(self):
        return any(p.is_parametric for p in self.parts)


@dataclass(frozen=True, eq=False)
class Mul(Builder):
    parts: tuple

    def build(self, order, weights, parametric):
        acc: Optional[TruncatedSeries] = None
        for p in self.parts:
            s = p.build(order, weights, parametric)
            acc = s if acc is None else (acc * s).truncate(order)
        return acc if acc is not None else TruncatedSeries.one(order, weights, parametric)

    def substitute(self, sub_a, sub_b):
        return Mul(tuple(p.substitute(sub_a, sub_b) for p in self.parts))

    @property
    def is_parametric(self):
        return any(p.is_parametric for p in self.parts)


@dataclass(frozen=True, eq=False)
class Scaled(Builder):
    c: Fraction
    child: Builder

    def build(self, order, weights, parametric):
        return self.child.build(order, weights, parametric).scale(self.c)

    def substitute(self, sub_a, sub_b):
        return Scaled(self.c, self.child.substitute(sub_a, sub_b))

    @property
    def is_parametric(self):
        return self.child.is_parametric


@dataclass(frozen=True, eq=False)
class Power(Builder):
    child: Builder
    k: int

    def build(self, order, weights, parametric):
        base = self.child.build(order, weights, parametric)
        acc = TruncatedSeries.one(order, weights, parametric)
        for _ in range(self.k):
            acc = (acc * base).truncate(order)
        return acc

    def substitute(self, sub_a, sub_b):
        return Power(self.child.substitute(sub_a, sub_b), self.k)

    @property
    def is_parametric(self):
        return self.child.is_parametric


@dataclass(frozen=True, eq=False)
class NegQ(Builder):
    """The child with ``q`` replaced by ``-q``."""

    child: Builder

    def build(self, order, weights, parametric):
        return self.child.build(order, weights, parametric).negate_q()

    def substitute(self, sub_a, sub_b):
        return NegQ(self.child.substitute(sub_a, sub_b))

    @property
    def is_parametric(self):
        return self.child.is_parametric


def poch(*factors) -> Product:
    """Shorthand: ``poch((x, start, step), ..., power=1)`` style products.

    Each factor is ``(x, start, step)`` or ``(x, start, step, power)`` where
    ``x`` is a Monomial or a number.
    """
    out = []
    for f in factors:
        x, start, step = f[:3]
        power = f[3] if len(f) > 3 else 1
        if not isinstance(x, Monomial):
            x = Monomial(Fraction(x))
        out.append((x, start, step, power))
    return Product(tuple(out))


__all__ = [
    "Builder", "Mono", "Sum", "Hecke", "Theta", "Product", "Rational", "Add", "Mul",
    "Scaled", "Power", "NegQ", "as_builder", "poch", "ONE",
]
