"""Acceptance checks, one per criterion.

Each test records a ``PASS`` or ``FAIL`` line with its measured numbers;
``conftest.py`` prints the collected lines at the end of the session.  Run
``python tests/test_acceptance.py`` to get the same lines without pytest.
"""

import subprocess
import sys
import time

import pytest

from heckeq.identities import check_links, verify, verify_all
from heckeq.identities.records import Status
from heckeq.identities.registry import (
    CLASSICAL, FINITE, PARAMETERIZED, SPECIALIZATIONS, TRANSFORM_SAMPLES, UNIVARIATE, all_ids,
)
from heckeq import partitions as P

RESULTS = {}

pytestmark = pytest.mark.slow


def record(n, ok, detail):
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}"
    RESULTS[n] = line
    print(line)
    assert ok, line


def _failures(reports):
    return [f"{r.id}={r.status.value}" for r in reports if r.status is not Status.VERIFIED]


def test_criterion_1_classical():
    slow, reps = [], []
    for rid, *_ in CLASSICAL:
        rep = verify(rid, 300)
        reps.append(rep)
        if rep.elapsed_ms > 60_000:
            slow.append(f"{rid} {rep.elapsed_ms / 1000:.1f}s")
    bad = _failures(reps)
    worst = max(r.elapsed_ms for r in reps) / 1000
    record(1, not bad and not slow and len(reps) == 8,
           f"{len(reps)} classical identities at q-order 300, slowest {worst:.1f}s (limit 60s)"
           + (f"; failures {bad}" if bad else "") + (f"; slow {slow}" if slow else ""))


def test_criterion_2_univariate():
    ids = [rid for rid, *_ in UNIVARIATE] + [rid for rid, *_ in SPECIALIZATIONS]
    t0 = time.perf_counter()
    reps = [verify(rid, 200) for rid in ids]
    links = [lk for rid in ids for lk in check_links(rid, 200)]
    elapsed = time.perf_counter() - t0
    bad = _failures(reps) + [f"{lk.id}<-{lk.parent}={lk.status.value}" for lk in links
                             if lk.status is not Status.VERIFIED]
    record(2, not bad and elapsed < 600,
           f"{len(reps)} identities and {len(links)} specialization links at q-order 200 "
           f"in {elapsed:.0f}s (limit 600s)" + (f"; failures {bad}" if bad else ""))


def test_criterion_3_parameterized():
    reps = [verify(rid, 40) for rid in PARAMETERIZED]
    bad = _failures(reps)
    record(3, not bad and len(reps) == 8,
           f"{len(reps)} two-parameter theorems at weighted order 40 (weights 1, 3, 3)"
           + (f"; failures {bad}" if bad else ""))


def test_criterion_4_finite():
    reps = [verify(rid, 12) for rid, *_ in FINITE]
    # parameter-free lemmas carry the single sample None
    few = [rid for rid, _, _, samples in FINITE if samples != (None,) and len(samples) < 4]
    bad = _failures(reps)
    record(4, not bad and not few and len(reps) == 15,
           f"{len(reps)} terminating lemmas for n = 0..12, parameterized ones at 4+ samples"
           + (f"; failures {bad}" if bad else "") + (f"; under-sampled {few}" if few else ""))


def test_criterion_5_transforms():
    reps = [verify(rid, 80) for rid in sorted(TRANSFORM_SAMPLES)]
    few = [rid for rid, s in TRANSFORM_SAMPLES.items() if len(s) < 6]
    bad = _failures(reps)
    record(5, not bad and not few and len(reps) == 4,
           f"{len(reps)} transformations at q-order 80, "
           f"{min(len(s) for s in TRANSFORM_SAMPLES.values())}+ samples each"
           + (f"; failures {bad}" if bad else ""))


def test_criterion_6_oracles():
    checks = {}
    checks["pentagonal = inversion (n <= 5000)"] = P._p_pentagonal(5000) == P._p_inversion(5000)
    enum = P.enumeration_counts(35)
    table = P.partition_table(35, cross_check=False)
    checks["enumeration = products (n <= 35)"] = all(
        enum[name] == list(table.get(name)) for name in ("p", "pod", "pbar"))
    lam = P.lambert_series(1001).coeffs(0, 1001)
    checks["Lambert = divisor excess (n <= 1000)"] = lam == [P.odd_divisor_excess(n) for n in range(1001)]
    lam2 = P.lambert_series(2001).coeffs(0, 2001)
    checks["r2 = 1 + 4 Lambert (n <= 2000)"] = all(
        P.two_squares_count(n) == (1 if n == 0 else 0) + 4 * lam2[n] for n in range(2001))
    bad = [k for k, ok in checks.items() if not ok]
    record(6, not bad, "; ".join(checks) if not bad else f"failures {bad}")


def test_criterion_7_inequalities():
    table = P.cached_table(2000)
    reps = [P.inequality_check(iid, 2000, table) for iid in sorted(P.INEQUALITIES)]
    viol = {r.id: r.violations[:3] for r in reps if not r.ok}
    bridges = [P.coefficient_nonnegativity_bridge(iid, 200, table) for iid in sorted(P.BRIDGES)]
    bad_bridges = [b.inequality for b in bridges if not b.ok]
    record(7, len(reps) == 10 and not viol and not bad_bridges,
           f"{len(reps)} inequalities nonnegative for N <= 2000, {len(bridges)} bridges exact "
           f"to order 200" + (f"; violations {viol}" if viol else "")
           + (f"; bridge failures {bad_bridges}" if bad_bridges else ""))


def test_criterion_8_negative_control():
    rep = verify("liu-412-uncorrected", 200)
    cli = subprocess.run([sys.executable, "-m", "heckeq.cli", "verify", "--id",
                          "liu-412-uncorrected", "--order", "50"], capture_output=True, text=True)
    mm = rep.mismatch
    ok = rep.status is Status.MISMATCH and mm is not None and cli.returncode == 1
    record(8, ok, f"uncorrected variant {rep.status.value} at q^{mm.exponent if mm else '?'}"
                  f", CLI exit {cli.returncode}")


def test_criterion_9_determinism():
    ids = all_ids(include_controls=True)
    kw = dict(ids=ids, transform_order=40)
    key = lambda r: (r.id, r.mode, r.order_used, r.status, r.mismatch, r.term_counts)
    serial = [key(r) for r in verify_all(parallelism=1, **kw)]
    pooled = [key(r) for r in verify_all(parallelism=8, **kw)]
    record(9, serial == pooled,
           f"{len(serial)} records, parallelism 1 vs 8 identical "
           f"(transforms at q-order 40, other records at default orders)")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
