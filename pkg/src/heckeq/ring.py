"""Exact coefficient arithmetic.

Plain rationals are :class:`fractions.Fraction`.  Two-parameter Laurent
polynomials in ``a`` and ``b`` are :class:`ParamPolynomial`.  A
:class:`Monomial` is a single term ``c * q^e_q * a^e_a * b^e_b``; it is what
gets substituted for the free parameters of an identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Union

ExactRational = Fraction

DEFAULT_WEIGHTS = (1, 3, 3)


class RingMismatchError(TypeError):
    pass


class NotAUnitError(ArithmeticError):
    pass


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise RingMismatchError(f"not a rational: {x!r}")


class ParamPolynomial:
    """Sparse Laurent polynomial in ``a, b`` over the rationals.

    Immutable.  ``terms`` maps ``(deg_a, deg_b)`` to a nonzero Fraction.
    """

    __slots__ = ("_terms", "_weights", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], object] = (), weights=(3, 3)):
        clean = {}
        for key, c in dict(terms).items():
            c = as_rational(c)
            if c:
                clean[(int(key[0]), int(key[1]))] = c
        wa, wb = weights
        if wa <= 0 or wb <= 0:
            raise ValueError("parameter weights must be positive")
        self._terms = clean
        self._weights = (int(wa), int(wb))
        self._hash = None

    @classmethod
    def const(cls, c, weights=(3, 3)) -> "ParamPolynomial":
        return cls({(0, 0): c}, weights)

    @classmethod
    def a(cls, weights=(3, 3)) -> "ParamPolynomial":
        return cls({(1, 0): 1}, weights)

    @classmethod
    def b(cls, weights=(3, 3)) -> "ParamPolynomial":
        return cls({(0, 1): 1}, weights)

    @property
    def terms(self) -> dict[tuple[int, int], Fraction]:
        return dict(self._terms)

    @property
    def weights(self) -> tuple[int, int]:
        return self._weights

    def items(self):
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def is_unit(self) -> bool:
        return len(self._terms) == 1

    def weight(self, key) -> int:
        return self._weights[0] * key[0] + self._weights[1] * key[1]

    def min_weight(self):
        if not self._terms:
            return None
        return min(self.weight(k) for k in self._terms)

    def _check(self, other) -> "ParamPolynomial":
        if not isinstance(other, ParamPolynomial):
            raise RingMismatchError("cannot mix ParamPolynomial with a plain rational")
        if other._weights != self._weights:
            raise RingMismatchError(f"weight mismatch {self._weights} != {other._weights}")
        return other

    def __add__(self, other):
        other = self._check(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return ParamPolynomial(out, self._weights)

    def __neg__(self):
        return ParamPolynomial({k: -c for k, c in self._terms.items()}, self._weights)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __mul__(self, other):
        other = self._check(other)
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + c1 * c2
        return ParamPolynomial(out, self._weights)

    def scale(self, c) -> "ParamPolynomial":
        c = as_rational(c)
        return ParamPolynomial({k: v * c for k, v in self._terms.items()}, self._weights)

    def inverse(self) -> "ParamPolynomial":
        if len(self._terms) != 1:
            raise NotAUnitError(f"{self} is not a unit")
        ((i, j), c), = self._terms.items()
        return ParamPolynomial({(-i, -j): 1 / c}, self._weights)

    def __eq__(self, other):
        if isinstance(other, ParamPolynomial):
            return self._weights == other._weights and self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._weights, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"ParamPolynomial({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for (i, j), c in self.items():
            mono = "*".join(
                s for s in (_pow("a", i), _pow("b", j)) if s
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _pow(name: str, e: int) -> str:
    if e == 0:
        return ""
    return name if e == 1 else f"{name}^{e}"


RingElement = Union[Fraction, ParamPolynomial]


def _same_ring(x, y):
    px, py = isinstance(x, ParamPolynomial), isinstance(y, ParamPolynomial)
    if px != py:
        raise RingMismatchError("mixed-ring operands")
    if px:
        return x, x._check(y)
    return as_rational(x), as_rational(y)


def ring_add(x: RingElement, y: RingElement) -> RingElement:
    x, y = _same_ring(x, y)
    return x + y


def ring_mul(x: RingElement, y: RingElement) -> RingElement:
    x, y = _same_ring(x, y)
    return x * y


def ring_inv_unit(x: RingElement) -> RingElement:
    if isinstance(x, ParamPolynomial):
        return x.inverse()
    x = as_rational(x)
    if not x:
        raise NotAUnitError("zero is not a unit")
    return 1 / x


@dataclass(frozen=True)
class Monomial:
    """``coeff * q^e_q * a^e_a * b^e_b``.

    A zero ``coeff`` is the zero-parameter specialization; such a monomial
    must never be inverted.
    """

    coeff: Fraction = Fraction(1)
    e_q: int = 0
    e_a: int = 0
    e_b: int = 0

    def __post_init__(self):
        object.__setattr__(self, "coeff", as_rational(self.coeff))
        if not self.coeff:
            object.__setattr__(self, "e_q", 0)
            object.__setattr__(self, "e_a", 0)
            object.__setattr__(self, "e_b", 0)

    @property
    def is_zero(self) -> bool:
        return not self.coeff

    @property
    def is_constant(self) -> bool:
        return self.e_q == 0 and self.e_a == 0 and self.e_b == 0

    @property
    def has_params(self) -> bool:
        return bool(self.e_a or self.e_b)

    def weight(self, weights=DEFAULT_WEIGHTS) -> int:
        wq, wa, wb = weights
        return wq * self.e_q + wa * self.e_a + wb * self.e_b

    def __mul__(self, other) -> "Monomial":
        if not isinstance(other, Monomial):
            return Monomial(self.coeff * as_rational(other), self.e_q, self.e_a, self.e_b)
        return Monomial(
            self.coeff * other.coeff,
            self.e_q + other.e_q,
            self.e_a + other.e_a,
            self.e_b + other.e_b,
        )

    __rmul__ = __mul__

    def __neg__(self) -> "Monomial":
        return Monomial(-self.coeff, self.e_q, self.e_a, self.e_b)

    def __pow__(self, n: int) -> "Monomial":
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            return ONE
        return Monomial(self.coeff**n, self.e_q * n, self.e_a * n, self.e_b * n)

    def inverse(self) -> "Monomial":
        if self.is_zero:
            raise NotAUnitError("zero monomial has no inverse")
        return Monomial(1 / self.coeff, -self.e_q, -self.e_a, -self.e_b)

    def __truediv__(self, other: "Monomial") -> "Monomial":
        return self * other.inverse()

    def qshift(self, k: int) -> "Monomial":
        return Monomial(self.coeff, self.e_q + k, self.e_a, self.e_b)

    def negate_q(self) -> "Monomial":
        """Image under ``q -> -q``."""
        c = -self.coeff if self.e_q % 2 else self.coeff
        return Monomial(c, self.e_q, self.e_a, self.e_b)

    def substitute(self, sub_a: "Monomial", sub_b: "Monomial") -> "Monomial":
        out = Monomial(self.coeff, self.e_q)
        if self.e_a:
            out = out * sub_a**self.e_a
        if self.e_b:
            out = out * sub_b**self.e_b
        return out

    def to_param(self, weights=(3, 3)) -> ParamPolynomial:
        return ParamPolynomial({(self.e_a, self.e_b): self.coeff}, weights)

    def __str__(self):
        if self.is_zero:
            return "0"
        mono = "*".join(s for s in (_pow("q", self.e_q), _pow("a", self.e_a), _pow("b", self.e_b)) if s)
        if not mono:
            return str(self.coeff)
        if self.coeff == 1:
            return mono
        if self.coeff == -1:
            return "-" + mono
        return f"{self.coeff}*{mono}"


ONE = Monomial(1)
ZERO = Monomial(0)
A = Monomial(1, 0, 1, 0)
B = Monomial(1, 0, 0, 1)


def qm(k: int = 1, c=1) -> Monomial:
    """``c * q^k``."""
    return Monomial(c, k)


def parse_monomial(text: str) -> Monomial:
    """Parse forms like ``1``, ``-1``, ``0``, ``q``, ``-q^2``, ``q^-1``, ``1/2*q^3``."""
    s = text.replace(" ", "").replace("**", "^")
    if not s:
        raise ValueError("empty monomial")
    sign = 1
    if s[0] in "+-":
        sign = -1 if s[0] == "-" else 1
        s = s[1:]
    coeff = Fraction(1)
    exps = {"q": 0, "a": 0, "b": 0}
    for part in s.split("*"):
        if not part:
            raise ValueError(f"bad monomial {text!r}")
        if part[0] in "qab":
            name, _, e = part.partition("^")
            if len(name) != 1:
                raise ValueError(f"bad monomial {text!r}")
            exps[name] += int(e.strip("()")) if e else 1
        else:
            coeff *= Fraction(part)
    return Monomial(sign * coeff, exps["q"], exps["a"], exps["b"])


def monomials_product(ms: Iterable[Monomial]) -> Monomial:
    out = ONE
    for m in ms:
        out = out * m
    return out
