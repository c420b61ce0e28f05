from dataclasses import replace
from fractions import Fraction

import pytest

from heckeq.hecke import HeckeSpec
from heckeq.identities import engine
from heckeq.identities.builders import Hecke, Mono
from heckeq.identities.engine import (
    UnknownIdentityError, check_links, compare_series, verify, verify_all, verify_record,
    verify_transform, with_perturbed_rhs,
)
from heckeq.identities.records import IdentityRecord, Mode, Status
from heckeq.identities.registry import (
    CONTROL_REGISTRY, FINITE, PARAMETERIZED, REGISTRY, SPECIALIZATIONS, TRANSFORM_SAMPLES, all_ids,
    get_record,
)
from heckeq.ring import DEFAULT_WEIGHTS, ONE, Monomial
from heckeq.series import TruncatedSeries


def qm(k=1, c=1):
    return Monomial(c, k)


def test_registry_shape():
    modes = [r.mode for r in REGISTRY.values()]
    assert modes.count(Mode.PARAMETERIZED) == 8
    assert modes.count(Mode.FINITE_LEMMA) == 15
    assert modes.count(Mode.TRANSFORM_SAMPLED) == 4
    assert len(SPECIALIZATIONS) == 39
    assert all_ids() == sorted(REGISTRY)
    assert not set(REGISTRY) & set(CONTROL_REGISTRY)
    for rid in ("jacobi-cube", "rogers-hecke", "liu-412", "liu-413", "liu-414", "wang-yee-61",
                "chan-liu-48", "chan-liu-49", "thm-t1", "cor-c1", "lem-l1", "thm-t3-5", "thm-8-1",
                "two-squares", "eq-5-11", "eq-5-12"):
        assert get_record(rid).mode is Mode.UNIVARIATE
    for rec in REGISTRY.values():
        assert len(rec.samples) >= (6 if rec.mode is Mode.TRANSFORM_SAMPLED else 0)


def test_specialization_links_point_at_parameterized_parents():
    for rec in REGISTRY.values():
        for link in rec.links:
            assert get_record(link.parent).mode is Mode.PARAMETERIZED


def test_verify_thm_t1():
    rep = verify("thm-t1", 100)
    assert rep.status is Status.VERIFIED and rep.mismatch is None
    assert rep.order_used == 100 and rep.term_counts[0] > 0


def test_perturbed_rhs_reports_first_difference():
    rec = with_perturbed_rhs(get_record("thm-t1"), Mono(qm(1)))
    rep = verify_record(rec, 50)
    assert rep.status is Status.MISMATCH
    mm = rep.mismatch
    assert (mm.exponent, mm.dega, mm.degb, mm.lhs, mm.rhs) == (1, 0, 0, 1, 2)


def test_alias_for_finite_range():
    rep = verify("eq-1-6-n-range")
    assert rep.ok and rep.id == "eq-1-6" and rep.order_used == 12


def test_unknown_id_suggests_neighbours():
    with pytest.raises(UnknownIdentityError) as info:
        verify("thm-7-51")
    assert "thm-7-15" in info.value.suggestions


def test_order_guard():
    with pytest.raises(ValueError):
        verify("thm-t1", 3)


def test_empty_selection():
    assert verify_all(ids=[]) == []


def test_builder_error_report():
    bad = IdentityRecord("bad", "non-terminating", "", Mode.UNIVARIATE,
                         Hecke(HeckeSpec((-1, 0, 1, 0, 0, 0))), Mono(ONE))
    rep = verify_record(bad, 10)
    assert rep.status is Status.BUILDER_ERROR and rep.mismatch is None
    assert "NonTerminatingError" in rep.error


def test_transform_pole_is_builder_error():
    p = dict(TRANSFORM_SAMPLES["eq-1-3"][1], c=qm(0))
    rep = verify_transform("eq-1-3", [p], 20)
    assert rep.status is Status.BUILDER_ERROR


def test_transform_proof_substitutions_low_order():
    # alpha = q^2, beta = -1, c = q, d = -q^2 at (a, b) = (1, q)
    assert verify_transform("eq-1-3", [TRANSFORM_SAMPLES["eq-1-3"][0]], 30).ok
    # alpha = q^2, c = -q, z = q^-1
    assert verify_transform("eq-t2-9", [TRANSFORM_SAMPLES["eq-t2-9"][0]], 30).ok
    with pytest.raises(ValueError):
        verify_transform("thm-t1", [{}], 30)


def test_transform_wrong_sample_mismatches():
    from heckeq.identities import finite

    p = TRANSFORM_SAMPLES["eq-t2-9"][0]
    lhs, rhs = finite.eq_t2_9(p, 20)
    other, _ = finite.eq_t2_9(dict(p, z=qm(-1, 2)), 20)
    assert compare_series(lhs, rhs) is None
    assert compare_series(other, rhs) is not None


def test_finite_mismatch_carries_location():
    rec = get_record("eq-1-6")

    def broken(n, p):
        lhs, rhs = rec.pair(n, p)
        return (lhs, rhs) if n < 3 else (lhs, rhs + rhs)

    rep = verify_record(replace(rec, pair=broken), 5)
    assert rep.status is Status.MISMATCH
    assert rep.mismatch.where == "n=3 sample=0"
    assert rep.mismatch.exponent == 0


def test_first_difference_is_lowest_weight():
    lhs = TruncatedSeries.from_terms({(0, 1, 0): 1, (5, 0, 0): 1}, 20)
    rhs = TruncatedSeries.from_terms({(0, 1, 0): 2, (2, 0, 0): 1}, 20)
    mm = compare_series(lhs, rhs)
    # q^2 has weight 2, below a (weight 3)
    assert (mm.exponent, mm.dega, mm.lhs, mm.rhs) == (2, 0, 0, 1)


def test_liu_corrections_and_controls():
    for rid in ("liu-412", "liu-413", "liu-414", "chan-liu-48"):
        assert verify(rid, 100).ok, rid
    for rid in CONTROL_REGISTRY:
        rep = verify(rid, 100)
        assert rep.status is Status.MISMATCH and rep.mismatch is not None, rid


@pytest.mark.parametrize("rid", ["thm-7-15", "thm-9-4"])
def test_parameterized_truncation_monotonicity(rid):
    rec = get_record(rid)
    for side in (rec.lhs, rec.rhs):
        hi = side.build(30, DEFAULT_WEIGHTS, True)
        lo = side.build(15, DEFAULT_WEIGHTS, True)
        assert hi.truncate(15) == lo
    assert verify(rid, 15).ok


@pytest.mark.parametrize("rid", ["thm-t1", "sp-7-15-q-mq", "eq-5-3", "wang-yee-61", "sp-9-2-qi-0"])
def test_links(rid):
    reps = check_links(rid, 60)
    assert reps and all(r.status is Status.VERIFIED for r in reps)


def test_link_detects_wrong_kappa():
    rec = get_record("eq-5-3")
    link = rec.links[0]
    wrong = replace(rec, links=(replace(link, kappa=None),))
    REGISTRY["tmp-wrong-kappa"] = replace(wrong, id="tmp-wrong-kappa")
    try:
        [rep] = check_links("tmp-wrong-kappa", 30)
    finally:
        del REGISTRY["tmp-wrong-kappa"]
    assert rep.status is Status.MISMATCH


def test_parallel_matches_serial_small():
    ids = ["thm-t1", "liu-412-uncorrected", "eq-7-8", "cor-c1"]
    a = verify_all(order=40, parallelism=1, ids=ids, n_max=4)
    b = verify_all(order=40, parallelism=2, ids=ids, n_max=4)
    key = lambda r: (r.id, r.status, r.mismatch, r.order_used, r.term_counts)
    assert [key(r) for r in a] == [key(r) for r in b]
    assert [r.id for r in a] == sorted(ids)
