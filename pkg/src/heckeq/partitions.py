"""Partition-count tables and the alternating Hecke-type partition inequalities.

Three counting functions are tabulated exactly:

* ``p(n)``     ordinary partitions, generating function ``1/(q;q)_inf``
* ``pod(n)``   partitions whose odd parts are distinct, ``(-q;q^2)_inf/(q^2;q^2)_inf``
* ``pbar(n)``  overpartitions, ``(-q;q)_inf/(q;q)_inf``

Each table is computed twice by independent routes and cross-checked.  The
inequalities are sums of the form

    S(N) = sum_{n <= bound(N)} sum_{j=-n}^{n or n+1} sign(n, j) * sum_t c_t f(arg_t(N, n, j))

where ``f(x) = 0`` unless ``x`` is a nonnegative integer.  Each one is also
the ``q^N`` coefficient of a series with visibly nonnegative coefficients,
which :func:`coefficient_nonnegativity_bridge` checks term by term.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .ring import DEFAULT_WEIGHTS, Monomial
from .series import PochhammerArg, TruncatedSeries, inverse_pochhammer, pochhammer


class CoverageError(ValueError):
    """A table is too short for the requested arguments."""


# -- tables ----------------------------------------------------------------------


def _p_pentagonal(max_n: int) -> list:
    """Euler's recurrence p(n) = sum_k (-1)^(k+1) (p(n - k(3k-1)/2) + p(n - k(3k+1)/2))."""
    p = [0] * (max_n + 1)
    p[0] = 1
    for n in range(1, max_n + 1):
        total, k = 0, 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > n:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[n - g1]
            g2 = g1 + k
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return p


def _product_table(factors: Sequence[tuple], max_n: int) -> list:
    """Integer coefficients of a product of ``(c q^start; q^step)_inf^(+-1)`` factors."""
    order = max_n + 1
    s = TruncatedSeries.one(order, DEFAULT_WEIGHTS)
    for c, start, step, power in factors:
        arg = PochhammerArg(Monomial(c, 0), start, step)
        f = pochhammer(arg, order) if power > 0 else inverse_pochhammer(arg, order)
        s = s * f
    return s.int_coeffs(0, order)


def _p_inversion(max_n: int) -> list:
    order = max_n + 1
    euler = pochhammer(PochhammerArg(Monomial(1, 0), 1, 1), order)
    return euler.invert().int_coeffs(0, order)


@dataclass(frozen=True)
class PartitionTable:
    max_n: int
    p: tuple
    pod: tuple
    pbar: tuple

    def get(self, name: str) -> tuple:
        return getattr(self, name)

    def value(self, name: str, x) -> int:
        """``f(x)`` with ``f = 0`` off the nonnegative integers."""
        if isinstance(x, Fraction):
            if x.denominator != 1:
                return 0
            x = x.numerator
        if x < 0:
            return 0
        if x > self.max_n:
            raise CoverageError(f"{name}({x}) is beyond the table (max_n = {self.max_n})")
        return self.get(name)[x]


def partition_table(max_n: int, cross_check: bool = True) -> PartitionTable:
    """Tables of p, pod and pbar for ``0 <= n <= max_n``.

    ``p`` comes from the pentagonal recurrence and is checked against the
    inverted Euler product; ``pod`` and ``pbar`` come from their products
    and are checked against convolutions of ``p`` with the distinct-part
    factors.  Small entries are also checked against brute enumeration.
    """
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    p = _p_pentagonal(max_n)
    pod = _product_table([(-1, 1, 2, 1), (1, 2, 2, -1)], max_n)
    pbar = _product_table([(-1, 1, 1, 1), (1, 1, 1, -1)], max_n)
    if cross_check:
        if p != _p_inversion(max_n):
            raise AssertionError("pentagonal recurrence disagrees with series inversion")
        if pod != pod_via_convolution(max_n) or pbar != pbar_via_convolution(max_n):
            raise AssertionError("product tables disagree with convolution oracle")
        small = min(max_n, ENUMERATION_CUTOFF)
        enum = enumeration_counts(small)
        for name, tab in (("p", p), ("pod", pod), ("pbar", pbar)):
            if list(tab[:small + 1]) != enum[name]:
                raise AssertionError(f"{name} disagrees with enumeration")
    return PartitionTable(max_n, tuple(p), tuple(pod), tuple(pbar))


@lru_cache(maxsize=8)
def cached_table(max_n: int) -> PartitionTable:
    return partition_table(max_n)


# -- independent oracles -----------------------------------------------------------

ENUMERATION_CUTOFF = 35


def _partitions(n: int, largest: Optional[int] = None):
    if largest is None or largest > n:
        largest = n
    if n == 0:
        yield ()
        return
    for k in range(largest, 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


def enumeration_counts(max_n: int) -> dict:
    """p, pod and pbar by listing partitions (practical up to about 40)."""
    out = {"p": [], "pod": [], "pbar": []}
    for n in range(max_n + 1):
        cp = cpod = cpbar = 0
        for lam in _partitions(n):
            cp += 1
            odd = [x for x in lam if x % 2]
            if len(odd) == len(set(odd)):
                cpod += 1
            # overline the first copy of each distinct part or not
            cpbar += 2 ** len(set(lam))
        out["p"].append(cp)
        out["pod"].append(cpod)
        out["pbar"].append(cpbar)
    return out


def _distinct_parts(max_n: int, parity: Optional[int]) -> list:
    """Partitions into distinct parts (optionally all of one parity), by 0/1 knapsack."""
    d = [0] * (max_n + 1)
    d[0] = 1
    for part in range(1, max_n + 1):
        if parity is not None and part % 2 != parity:
            continue
        for n in range(max_n, part - 1, -1):
            d[n] += d[n - part]
    return d


def _even_parts(max_n: int) -> list:
    """Partitions into even parts: p(n/2) for even n."""
    half = _p_pentagonal(max_n // 2)
    return [half[n // 2] if n % 2 == 0 else 0 for n in range(max_n + 1)]


def _convolve(a: list, b: list, max_n: int) -> list:
    return [sum(a[k] * b[n - k] for k in range(n + 1)) for n in range(max_n + 1)]


def pod_via_convolution(max_n: int) -> list:
    return _convolve(_distinct_parts(max_n, 1), _even_parts(max_n), max_n)


def pbar_via_convolution(max_n: int) -> list:
    return _convolve(_distinct_parts(max_n, None), _p_pentagonal(max_n), max_n)


def odd_divisor_excess(n: int) -> int:
    """``d_1(n) - d_3(n)``: odd divisors that are 1 mod 4 minus those 3 mod 4."""
    if n <= 0:
        return 0
    total = 0
    for d in range(1, math.isqrt(n) + 1):
        if n % d:
            continue
        for e in {d, n // d}:
            if e % 2:
                total += 1 if e % 4 == 1 else -1
    return total


def lambert_series(order: int) -> TruncatedSeries:
    """``sum_{n>=1} q^n / (1 + q^(2n))`` below ``q^order``."""
    s = TruncatedSeries.zero(order, DEFAULT_WEIGHTS)
    for n in range(1, order):
        t = TruncatedSeries.monomial(Monomial(1, n), order, DEFAULT_WEIGHTS)
        s = s + t.div_binomial(Monomial(-1, 2 * n))
    return s


def two_squares_count(n: int) -> int:
    """Number of integer pairs ``(x, y)`` with ``x^2 + y^2 = n``."""
    if n < 0:
        return 0
    count = 0
    for x in range(-math.isqrt(n), math.isqrt(n) + 1):
        r = n - x * x
        y = math.isqrt(r)
        if y * y == r:
            count += 1 if y == 0 else 2
    return count


# -- inequalities --------------------------------------------------------------------


@dataclass(frozen=True)
class Arg:
    """``(cN N + cnn n^2 + cn n + cjj j^2 + c0) / den``."""

    cN: int = 1
    cnn: int = 0
    cn: int = 0
    cjj: int = -1
    c0: int = 0
    den: int = 1

    def __post_init__(self):
        if self.cnn > 0 or self.cn > 0 or self.cjj >= 0 or self.den < 1:
            raise ValueError("arguments must decrease in n and |j|")

    def at(self, N: int, n: int, j: int) -> Fraction:
        num = self.cN * N + self.cnn * n * n + self.cn * n + self.cjj * j * j + self.c0
        return Fraction(num, self.den)


@dataclass(frozen=True)
class InequalitySpec:
    """One alternating double sum.

    ``terms`` pairs a coefficient with an :class:`Arg`.  The sign is
    ``(-1)^(sign_n n + sign_j j)``.  ``j`` runs from ``-n`` to ``n + j_extra``.
    ``bound`` is ``("sqrt", c)`` for ``floor(sqrt(N/c))`` or ``("floor", c)``
    for ``floor(N/c)``.
    """

    id: str
    table: str
    terms: tuple
    sign_n: int = 1
    sign_j: int = 0
    j_extra: int = 0
    bound: tuple = ("sqrt", 1)
    description: str = ""

    def n_bound(self, N: int) -> int:
        kind, c = self.bound
        if kind == "sqrt":
            return math.isqrt(N // c)
        if kind == "floor":
            return N // c
        raise ValueError(f"unknown bound kind {kind!r}")


def _a(cnn, cn, c0=0, den=1) -> Arg:
    return Arg(1, cnn, cn, -1, c0, den)


INEQUALITIES = {
    s.id: s
    for s in [
        InequalitySpec("thm-t4-1-a", "pbar", ((1, _a(-1, -1)),), bound=("sqrt", 1),
                       description="sum (-1)^n pbar(N - n^2 - n - j^2)"),
        InequalitySpec("thm-t4-1-b", "pod", ((1, _a(-2, -2)),), bound=("sqrt", 2),
                       description="sum (-1)^n pod(N - 2n^2 - 2n - j^2)"),
        InequalitySpec("thm-t4-1-4-1", "pbar", ((1, _a(-2, -1, 0, 2)), (1, _a(-2, -3, -1, 2))),
                       bound=("sqrt", 2),
                       description="sum (-1)^n (pbar((N-n-j^2)/2 - n^2) + pbar((N-3n-j^2-1)/2 - n^2))"),
        InequalitySpec("thm-t4-1-d", "p", ((1, _a(-3, -2, 0, 2)), (1, _a(-3, -4, -1, 2))),
                       bound=("sqrt", 3),
                       description="sum (-1)^n (p((N-3n^2-2n-j^2)/2) + p((N-3n^2-4n-j^2-1)/2))"),
        InequalitySpec("thm-t4-1-e", "pbar", ((1, _a(-2, -3, 0, 2)), (-1, _a(-2, -5, -2, 2))),
                       j_extra=1, bound=("sqrt", 2),
                       description="sum_{j=-n}^{n+1} (-1)^n (pbar((N-3n-j^2)/2 - n^2) "
                                   "- pbar((N-5n-j^2-2)/2 - n^2))"),
        InequalitySpec("thm-t4-1-5-10", "pod", ((1, _a(-2, -1)), (-1, _a(-2, -3, -1))),
                       sign_n=0, sign_j=1, bound=("sqrt", 2),
                       description="sum (-1)^j (pod(N-2n^2-n-j^2) - pod(N-2n^2-3n-j^2-1))"),
        InequalitySpec("thm-ineq2-5-13", "p", ((1, _a(-2, -2)),), bound=("floor", 2),
                       description="sum (-1)^n p(N - 2n^2 - 2n - j^2)"),
        InequalitySpec("thm-ineq2-b", "p", ((1, _a(-2, -1)), (1, _a(-2, -3, -1))),
                       bound=("floor", 2),
                       description="sum (-1)^n (p(N-2n^2-n-j^2) + p(N-2n^2-3n-1-j^2))"),
        InequalitySpec("thm-ineq2-c", "p", ((1, _a(-3, -2)), (1, _a(-3, -4, -1))),
                       bound=("floor", 3),
                       description="sum (-1)^n (p(N-3n^2-2n-j^2) + p(N-3n^2-4n-1-j^2))"),
        InequalitySpec("thm-ineq2-d", "p", ((1, _a(-2, -3)), (-1, _a(-2, -5, -2))),
                       j_extra=1, bound=("floor", 2),
                       description="sum_{j=-n}^{n+1} (-1)^n (p(N-2n^2-3n-j^2) - p(N-2n^2-5n-2-j^2))"),
    ]
}


def inequality_sum(spec: InequalitySpec, N: int, table: PartitionTable, extra_n: int = 0) -> int:
    """``S(N)``; ``extra_n`` widens the ``n`` range (the extra terms must vanish).

    Pairs ``(n, j)`` whose arguments are all negative contribute nothing and
    are skipped.  Every argument decreases in ``n`` and in ``|j|``, so the
    ``n`` loop stops at the first ``n`` with no nonnegative argument.
    """
    total = 0
    for n in range(spec.n_bound(N) + extra_n + 1):
        jmax = -1
        for _, arg in spec.terms:
            head = arg.cN * N + arg.cnn * n * n + arg.cn * n + arg.c0
            if head >= 0:
                jmax = max(jmax, math.isqrt(head // -arg.cjj))
        if jmax < 0:
            break
        for j in range(max(-n, -jmax), min(n + spec.j_extra, jmax) + 1):
            sign = -1 if (spec.sign_n * n + spec.sign_j * j) % 2 else 1
            for c, arg in spec.terms:
                v = table.value(spec.table, arg.at(N, n, j))
                if v:
                    total += sign * c * v
    return total


@dataclass(frozen=True)
class InequalityReport:
    id: str
    max_N: int
    values: tuple
    violations: tuple
    zeros: tuple

    @property
    def ok(self) -> bool:
        return not self.violations


def inequality_check(spec, max_N: int, table: Optional[PartitionTable] = None) -> InequalityReport:
    """Exact ``S(N)`` for ``N = 0..max_N``; negative values are reported as violations.

    The set of ``N`` with ``S(N) = 0`` is recorded as data.
    """
    if isinstance(spec, str):
        spec = get_inequality(spec)
    if max_N < 0:
        raise ValueError("max_N must be nonnegative")
    if table is None:
        table = cached_table(max_N)
    elif table.max_n < max_N:
        raise CoverageError(f"table covers n <= {table.max_n}, need {max_N}")
    values = tuple(inequality_sum(spec, N, table) for N in range(max_N + 1))
    violations = tuple(N for N, v in enumerate(values) if v < 0)
    zeros = tuple(N for N, v in enumerate(values) if v == 0)
    return InequalityReport(spec.id, max_N, values, violations, zeros)


def get_inequality(iid: str) -> InequalitySpec:
    try:
        return INEQUALITIES[iid]
    except KeyError:
        raise KeyError(iid) from None


# -- bridges to identities ----------------------------------------------------------

# inequality id -> (identity id, extra product factors (c, start, step, power), scale)
# The series is scale * extra * (left side of the identity).
BRIDGES = {
    "thm-t4-1-a": ("eq-5-1", (), 1),
    "thm-t4-1-b": ("eq-5-2", (), 1),
    "thm-t4-1-4-1": ("eq-5-3", (), 1),
    "thm-t4-1-d": ("eq-5-4", (), 1),
    "thm-t4-1-e": ("eq-5-5", (), 1),
    "thm-t4-1-5-10": ("eq-5-11", (), 2),
    "thm-ineq2-5-13": ("eq-5-12", (), 1),
    # 1/(q;q)_inf = (-q;q^2)_inf (-q^2;q^2)_inf/(q^2;q^2)_inf
    "thm-ineq2-b": ("eq-5-3", ((-1, 1, 2, 1),), 1),
    # 1/(q;q)_inf = (-q;q)_inf/(q^2;q^2)_inf
    "thm-ineq2-c": ("eq-5-4", ((-1, 1, 1, 1),), 1),
    "thm-ineq2-d": ("eq-5-5", ((-1, 1, 2, 1),), 1),
}


@dataclass(frozen=True)
class BridgeReport:
    inequality: str
    identity: str
    order: int
    ok: bool
    first_disagreement: Optional[int]
    negative_coefficients: tuple
    non_integral: tuple


def bridge_series(iid: str, order: int, side: str = "lhs") -> TruncatedSeries:
    """The series whose ``q^N`` coefficient is ``S(N)``, built from one side of the identity."""
    from .identities.registry import get_record

    rid, extra, scale = BRIDGES[iid]
    rec = get_record(rid)
    s = getattr(rec, side).build(order, DEFAULT_WEIGHTS, False)
    for c, start, step, power in extra:
        arg = PochhammerArg(Monomial(c, 0), start, step)
        s = s * (pochhammer(arg, order) if power > 0 else inverse_pochhammer(arg, order))
    return s.scale(scale)


def coefficient_nonnegativity_bridge(iid: str, order: int = 200,
                                     table: Optional[PartitionTable] = None) -> BridgeReport:
    """Compare ``S(N)`` with the bridge coefficients for ``N < order``.

    The bridge side is the sum side of the identity, whose coefficients are
    nonnegative by inspection; the report also lists any negative or
    non-integral coefficient.
    """
    rid = BRIDGES[iid][0]
    s = bridge_series(iid, order)
    cs = s.coeffs(0, order)
    rep = inequality_check(iid, order - 1, table)
    first = next((N for N in range(order) if cs[N] != rep.values[N]), None)
    neg = tuple(N for N, c in enumerate(cs) if c < 0)
    frac = tuple(N for N, c in enumerate(cs) if Fraction(c).denominator != 1)
    return BridgeReport(iid, rid, order, first is None and not neg and not frac, first, neg, frac)


__all__ = [
    "PartitionTable", "partition_table", "cached_table", "enumeration_counts", "CoverageError",
    "pod_via_convolution", "pbar_via_convolution", "odd_divisor_excess", "lambert_series",
    "two_squares_count", "Arg", "InequalitySpec", "INEQUALITIES", "inequality_sum",
    "inequality_check", "InequalityReport", "get_inequality", "BRIDGES", "bridge_series",
    "coefficient_nonnegativity_bridge", "BridgeReport", "ENUMERATION_CUTOFF",
]
