"""Verification engine: expand both sides of a record and compare.

Every check is a pure function of the record and the requested order, so
:func:`verify_all` can farm records out to a process pool and still return
identical report content for any level of parallelism.
"""

from __future__ import annotations

import difflib
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from ..hecke import NonIntegerExponentError as HeckeExponentError
from ..hypergeom import NonIntegerExponentError, RationalQ
from ..ring import DEFAULT_WEIGHTS, Monomial, NotAUnitError
from ..series import NonTerminatingError, PoleError, SpecializationError, TruncatedSeries
from .builders import Builder, NegQ, as_builder
from .records import IdentityRecord, Mismatch, Mode, Status, VerificationReport
from .registry import ALIASES, CONTROL_REGISTRY, REGISTRY, all_ids, get_record

BUILDER_ERRORS = (PoleError, NotAUnitError, NonTerminatingError, SpecializationError,
                  NonIntegerExponentError, HeckeExponentError, ZeroDivisionError)

MIN_ORDER = 4


class UnknownIdentityError(KeyError):
    def __init__(self, rid: str, suggestions: Sequence[str]):
        super().__init__(rid)
        self.rid = rid
        self.suggestions = list(suggestions)

    def __str__(self):
        hint = f"; did you mean {', '.join(self.suggestions)}?" if self.suggestions else ""
        return f"unknown identity id {self.rid!r}{hint}"


def nearest_ids(rid: str, n: int = 3) -> list:
    pool = all_ids(include_controls=True) + sorted(ALIASES)
    return difflib.get_close_matches(rid, pool, n=n, cutoff=0.4)


def lookup(rid: str) -> IdentityRecord:
    try:
        return get_record(rid)
    except KeyError:
        raise UnknownIdentityError(rid, nearest_ids(rid)) from None


def _mismatch(diff, where=None) -> Mismatch:
    e, i, j, lc, rc = diff
    return Mismatch(e, i, j, Fraction(lc), Fraction(rc), where)


def compare_series(lhs: TruncatedSeries, rhs: TruncatedSeries, where=None) -> Optional[Mismatch]:
    diff = lhs.first_difference(rhs)
    return None if diff is None else _mismatch(diff, where)


def compare_rational(lhs: RationalQ, rhs: RationalQ, where=None) -> Optional[Mismatch]:
    """Exact comparison; on failure the first differing coefficient of the expansions."""
    if lhs == rhs:
        return None
    lo = min(v for v in (lhs.valuation(), rhs.valuation(), 0) if v is not None)
    order = 16
    while True:
        # expand q^-lo * side so truncation orders stay positive
        shift = Monomial(1, -lo)
        ls = lhs.mul_monomial(shift).series(order)
        rs = rhs.mul_monomial(shift).series(order)
        diff = ls.first_difference(rs)
        if diff is not None:
            e, i, j, lc, rc = diff
            return Mismatch(e + lo, i, j, Fraction(lc), Fraction(rc), where)
        order *= 2


def _report(rec, order, status, mismatch=None, t0=0.0, counts=(0, 0), error=None, **details):
    return VerificationReport(rec.id, rec.mode, order, status, mismatch,
                              round((time.perf_counter() - t0) * 1000, 3), counts, error, details)


def _effective_order(rec: IdentityRecord, order: Optional[int]) -> int:
    if order is None:
        return rec.default_order
    if rec.mode is Mode.FINITE_LEMMA:
        if order < 0:
            raise ValueError("n range must be nonnegative")
        return order
    if order < MIN_ORDER:
        raise ValueError(f"order must be >= {MIN_ORDER}")
    return order


def verify_record(rec: IdentityRecord, order: Optional[int] = None, weights=DEFAULT_WEIGHTS,
                  samples: Optional[Sequence] = None) -> VerificationReport:
    """Verify one record; builder guard failures become BUILDER_ERROR reports."""
    order = _effective_order(rec, order)
    t0 = time.perf_counter()
    try:
        if rec.mode in (Mode.UNIVARIATE, Mode.PARAMETERIZED):
            par = rec.mode is Mode.PARAMETERIZED
            lhs = rec.lhs.build(order, weights, par)
            rhs = rec.rhs.build(order, weights, par)
            mm = compare_series(lhs, rhs)
            counts = (lhs.term_count(), rhs.term_count())
        elif rec.mode is Mode.FINITE_LEMMA:
            mm, counts = None, (0, 0)
            for k, p in enumerate(samples if samples is not None else rec.samples):
                for n in range(order + 1):
                    lhs, rhs = rec.pair(n, p)
                    mm = compare_rational(lhs, rhs, where=f"n={n} sample={k}")
                    counts = (counts[0] + len(lhs.num), counts[1] + len(rhs.num))
                    if mm:
                        break
                if mm:
                    break
        else:
            mm, counts = None, (0, 0)
            for k, p in enumerate(samples if samples is not None else rec.samples):
                lhs, rhs = rec.pair(p, order, weights)
                mm = compare_series(lhs, rhs, where=f"sample={k}")
                counts = (counts[0] + lhs.term_count(), counts[1] + rhs.term_count())
                if mm:
                    break
    except BUILDER_ERRORS as exc:
        return _report(rec, order, Status.BUILDER_ERROR, t0=t0,
                       error=f"{type(exc).__name__}: {exc}")
    status = Status.VERIFIED if mm is None else Status.MISMATCH
    return _report(rec, order, status, mm, t0, counts)


def verify(rid: str, order: Optional[int] = None, weights=DEFAULT_WEIGHTS) -> VerificationReport:
    """Verify the record ``rid`` at ``order`` (its default when ``None``).

    For terminating lemmas ``order`` is the largest ``n`` checked.
    """
    return verify_record(lookup(rid), order, weights)


def verify_transform(rid: str, specializations: Sequence[dict], order: int = 80,
                     weights=DEFAULT_WEIGHTS) -> VerificationReport:
    """Verify a sampled transformation at the given parameter dictionaries."""
    rec = lookup(rid)
    if rec.mode is not Mode.TRANSFORM_SAMPLED:
        raise ValueError(f"{rid} is not a sampled transformation")
    return verify_record(rec, order, weights, samples=specializations)


def _worker(args):
    rid, order = args
    return verify_record(get_record(rid), order)


def _order_for(rec: IdentityRecord, orders: dict) -> Optional[int]:
    return orders.get(rec.mode)


def verify_all(order: Optional[int] = None, parallelism: int = 1, ids: Optional[Iterable[str]] = None,
               include_controls: bool = False, param_order: Optional[int] = None,
               n_max: Optional[int] = None, transform_order: Optional[int] = None) -> list:
    """One report per selected record, sorted by id.

    ``order`` applies to univariate records, ``param_order`` to
    parameterized ones, ``n_max`` to terminating lemmas and
    ``transform_order`` to sampled transformations; ``None`` keeps each
    record's default.
    """
    if parallelism < 1:
        raise ValueError("parallelism must be >= 1")
    if ids is None:
        ids = all_ids(include_controls)
    recs = sorted({lookup(r).id: lookup(r) for r in ids}.values(), key=lambda r: r.id)
    orders = {Mode.UNIVARIATE: order, Mode.PARAMETERIZED: param_order,
              Mode.FINITE_LEMMA: n_max, Mode.TRANSFORM_SAMPLED: transform_order}
    jobs = [(r.id, _order_for(r, orders)) for r in recs]
    if parallelism == 1 or len(jobs) <= 1:
        return [_worker(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=parallelism) as pool:
        return list(pool.map(_worker, jobs))


# -- specialization links -----------------------------------------------------


@dataclass(frozen=True)
class LinkReport:
    id: str
    parent: str
    status: Status
    side: Optional[str] = None
    mismatch: Optional[Mismatch] = None
    error: Optional[str] = None


def _link_side(link, parent_side: Builder, own_side: Builder) -> tuple:
    p = parent_side.substitute(link.sub_a, link.sub_b)
    if link.negate_q:
        p = NegQ(p)
    d = as_builder(link.c0) + link.c1 * own_side if link.c0 else link.c1 * own_side
    if link.kappa is not None:
        d = link.kappa * d
    return p, d


def check_links(rid: str, order: int = 200, weights=DEFAULT_WEIGHTS) -> list:
    """Check ``P = kappa * (c0 + c1 * D)`` on both sides for every link of ``rid``."""
    rec = lookup(rid)
    out = []
    for link in rec.links:
        parent = lookup(link.parent)
        try:
            for side, ps, ds in (("lhs", parent.lhs, rec.lhs), ("rhs", parent.rhs, rec.rhs)):
                p, d = _link_side(link, ps, ds)
                mm = compare_series(p.build(order, weights, False), d.build(order, weights, False))
                if mm:
                    out.append(LinkReport(rec.id, link.parent, Status.MISMATCH, side, mm))
                    break
            else:
                out.append(LinkReport(rec.id, link.parent, Status.VERIFIED))
        except BUILDER_ERRORS as exc:
            out.append(LinkReport(rec.id, link.parent, Status.BUILDER_ERROR,
                                  error=f"{type(exc).__name__}: {exc}"))
    return out


def check_symbolic_specialization(rid: str, weighted_order: int = 40, weights=DEFAULT_WEIGHTS):
    """Compare the certified specialization of the two-parameter expansion
    with the directly substituted builder.

    Returns ``(certified_order, lhs_mismatch, rhs_mismatch)`` per link, or
    raises :class:`SpecializationError` when the substitution cannot be
    certified (for example ``a -> 1``, whose image carries no ``q``).
    """
    rec = lookup(rid)
    out = []
    for link in rec.links:
        parent = lookup(link.parent)
        res = []
        for ps in (parent.lhs, parent.rhs):
            full = ps.build(weighted_order, weights, True)
            spec = full.specialize(link.sub_a, link.sub_b)
            direct = ps.substitute(link.sub_a, link.sub_b).build(spec.order, weights, False)
            res.append(compare_series(spec, direct))
        out.append((spec.order, res[0], res[1]))
    return out


def with_perturbed_rhs(rec: IdentityRecord, extra: Builder) -> IdentityRecord:
    """A copy of ``rec`` whose right side has ``extra`` added (for fault injection)."""
    return replace(rec, rhs=rec.rhs + extra)


__all__ = [
    "verify", "verify_all", "verify_record", "verify_transform", "check_links",
    "check_symbolic_specialization", "with_perturbed_rhs", "UnknownIdentityError", "nearest_ids",
    "lookup", "LinkReport", "compare_series", "compare_rational", "REGISTRY", "CONTROL_REGISTRY",
]
