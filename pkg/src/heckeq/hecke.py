"""Double sums of Hecke type and theta series.

A :class:`HeckeSpec` sums ``(-1)^(s_n*n + s_j*j) * prod(1 + s*q^(c*n + d)) *
q^(A n^2 + B n j + C j^2 + D n + E j + F)`` over a region of lattice points
given row by row: the outer index ``n`` runs upward from ``n_start`` and the
inner index ``j`` over a range that depends on ``n``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Union

from .ring import DEFAULT_WEIGHTS
from .series import NonTerminatingError, TruncatedSeries

LOOKAHEAD = 8


class NonIntegerExponentError(ValueError):
    pass


class Region(enum.Enum):
    J_FULL = "j in [-n, n]"
    J_PLUS = "j in [-n, n+1]"
    J_SHIFT = "j in [-n+1, n]"
    JACOBI = "m >= |n|, summed as rows m with n in [-m, m]"
    ROGERS = "|m| <= n/2, n >= 0"

    def bounds(self, n: int) -> tuple[int, int]:
        if self in (Region.J_FULL, Region.JACOBI):
            return -n, n
        if self is Region.J_PLUS:
            return -n, n + 1
        if self is Region.J_SHIFT:
            return -n + 1, n
        h = n // 2 if n >= 0 else -1
        return -h, h

    def slope(self) -> Fraction:
        """Asymptotic ``|j|/n`` at the region boundary."""
        return Fraction(1, 2) if self is Region.ROGERS else Fraction(1)


class Kind(enum.Enum):
    SQUARE = "sum over all n of q^(c n^2)"
    TRIANGULAR = "sum over n >= 0 of q^(2n(n+1))"


@dataclass(frozen=True)
class HeckeSpec:
    quad: tuple  # (A, B, C, D, E, F)
    region: Region = Region.J_FULL
    n_start: int = 0
    sign: tuple = (0, 0)
    factors: tuple = ()  # (s, c, d) meaning (1 + s*q^(c*n + d))
    # either a series or a callable taking the order
    prefactor: Union[TruncatedSeries, Callable[[int], TruncatedSeries], None] = None

    def exponent(self, n: int, j: int) -> int:
        A, B, C, D, E, F = (Fraction(x) for x in self.quad)
        e = A * n * n + B * n * j + C * j * j + D * n + E * j + F
        if e.denominator != 1:
            raise NonIntegerExponentError(f"exponent {e} at (n, j) = ({n}, {j})")
        return int(e)

    def row_min(self, n: int) -> Optional[int]:
        lo, hi = self.region.bounds(n)
        if lo > hi:
            return None
        A, B, C, D, E, F = (Fraction(x) for x in self.quad)
        cands = {lo, hi}
        if C > 0:
            v = -(B * n + E) / (2 * C)
            for j in (math.floor(v), math.ceil(v)):
                if lo <= j <= hi:
                    cands.add(j)
        base = min(self.exponent(n, j) for j in cands)
        shift = sum(min(0, c * n + d) for _, c, d in self.factors)
        return base + shift


def check_termination(spec: HeckeSpec) -> None:
    """Reject specs whose row minimum does not tend to infinity.

    The row minimum is piecewise quadratic in ``n``; its leading coefficient
    is the minimum of ``A + B*t + C*t^2`` over the admissible slopes
    ``t = j/n`` (boundary slopes, plus the interior vertex when ``C > 0``).
    """
    A, B, C = (Fraction(x) for x in spec.quad[:3])
    s = spec.region.slope()
    cands = [A + B * t + C * t * t for t in (-s, s)]
    if C > 0:
        t = -B / (2 * C)
        if -s <= t <= s:
            cands.append(A + B * t + C * t * t)
    lead = min(cands)
    if lead < 0:
        raise NonTerminatingError(f"row minimum of {spec.quad} decreases without bound")
    if lead == 0:
        D, E = Fraction(spec.quad[3]), Fraction(spec.quad[4])
        lin = min(D + E * t for t in (-s, s))
        if lin <= 0:
            raise NonTerminatingError(f"row minimum of {spec.quad} does not grow")


def hecke_rows(spec: HeckeSpec, order: int):
    """Yield ``(n, [(exponent, coeff), ...])`` for rows that touch ``[.., order)``."""
    check_termination(spec)
    settled = 0
    n = spec.n_start
    while True:
        m = spec.row_min(n)
        if m is not None and m < order:
            yield n, _row_terms(spec, n, order)
            settled = 0
        else:
            # growth is guaranteed by check_termination; the row minimum may
            # still oscillate with the parity of n (ROGERS), so count rows
            settled += 1
        if settled >= LOOKAHEAD:
            return
        n += 1


def _row_terms(spec: HeckeSpec, n: int, order: int):
    lo, hi = spec.region.bounds(n)
    sn, sj = spec.sign
    out = []
    shifts = [(1, 0)]
    for s, c, d in spec.factors:
        k = c * n + d
        shifts = shifts + [(coef * s, off + k) for coef, off in shifts]
    for j in range(lo, hi + 1):
        e = spec.exponent(n, j)
        sgn = -1 if (sn * n + sj * j) % 2 else 1
        for coef, off in shifts:
            if e + off < order:
                out.append((e + off, sgn * coef))
    return out


def build_hecke(spec: HeckeSpec, order: int, weights=DEFAULT_WEIGHTS) -> TruncatedSeries:
    """Truncated double sum times the optional prefactor."""
    acc: dict = {}
    for _, row in hecke_rows(spec, order):
        for e, c in row:
            acc[e] = acc.get(e, 0) + c
    terms = {(e, 0, 0): c for e, c in acc.items() if c}
    s = TruncatedSeries.from_terms(terms, order, weights, parametric=False) if terms \
        else TruncatedSeries.zero(order, weights)
    if spec.prefactor is not None:
        pre = spec.prefactor
        if not isinstance(pre, TruncatedSeries):
            pre = pre(order)
        s = (s * pre).truncate(order)
    return s


def theta_sum(kind: Kind, order: int, c: int = 1, weights=DEFAULT_WEIGHTS) -> TruncatedSeries:
    """``sum_{n in Z} q^(c n^2)`` (SQUARE) or ``sum_{n >= 0} q^(2n(n+1))`` (TRIANGULAR)."""
    if c < 1:
        raise ValueError("c must be >= 1")
    acc: dict = {}
    n = 0
    if kind is Kind.SQUARE:
        while c * n * n < order:
            acc[c * n * n] = acc.get(c * n * n, 0) + (1 if n == 0 else 2)
            n += 1
    else:
        while 2 * n * (n + 1) < order:
            acc[2 * n * (n + 1)] = acc.get(2 * n * (n + 1), 0) + 1
            n += 1
    return TruncatedSeries.from_terms({(e, 0, 0): v for e, v in acc.items()}, order, weights,
                                      parametric=False)
