from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from heckeq import partitions as P
from heckeq.partitions import CoverageError


@pytest.fixture(scope="module")
def table():
    return P.cached_table(400)


def naive_sum(spec, N, table, extra_n=0):
    # no pruning: every (n, j) in the stated range, every term
    total = 0
    for n in range(spec.n_bound(N) + extra_n + 1):
        for j in range(-n, n + spec.j_extra + 1):
            sign = -1 if (spec.sign_n * n + spec.sign_j * j) % 2 else 1
            for c, arg in spec.terms:
                total += sign * c * table.value(spec.table, arg.at(N, n, j))
    return total


def test_small_values(table):
    assert (table.p[5], table.pbar[3], table.pod[5]) == (7, 8, 4)
    assert table.p[:10] == (1, 1, 2, 3, 5, 7, 11, 15, 22, 30)
    assert table.p[100] == 190569292


def test_table_cross_checks():
    t = P.partition_table(2000)
    assert t.p[:2001] == tuple(P._p_inversion(2000))
    assert list(t.pod) == P.pod_via_convolution(2000)
    assert list(t.pbar) == P.pbar_via_convolution(2000)


def test_enumeration_agrees(table):
    enum = P.enumeration_counts(P.ENUMERATION_CUTOFF)
    for name in ("p", "pod", "pbar"):
        assert enum[name] == list(table.get(name)[:P.ENUMERATION_CUTOFF + 1])


def test_value_off_integers(table):
    assert table.value("p", -1) == 0
    assert table.value("p", Fraction(7, 2)) == 0
    assert table.value("p", Fraction(10, 2)) == 7
    with pytest.raises(CoverageError):
        table.value("p", 401)
    with pytest.raises(ValueError):
        P.partition_table(-1)


def test_lambert_and_two_squares():
    s = P.lambert_series(200)
    assert s.coeffs(0, 200) == [P.odd_divisor_excess(n) for n in range(200)]
    assert s.coeffs(0, 4)[3] == 0
    assert all(P.two_squares_count(n) == 4 * P.odd_divisor_excess(n) for n in range(1, 500))
    assert P.two_squares_count(0) == 1


def test_arg_must_decrease():
    with pytest.raises(ValueError):
        P.Arg(cnn=1)
    with pytest.raises(ValueError):
        P.Arg(cjj=0)


def test_inequality_examples(table):
    for iid in P.INEQUALITIES:
        assert P.inequality_sum(P.INEQUALITIES[iid], 0, table) == 1, iid
    assert P.inequality_sum(P.INEQUALITIES["thm-t4-1-5-10"], 1, table) == 0


@pytest.mark.parametrize("iid", sorted(P.INEQUALITIES))
def test_pruned_sum_matches_naive(iid, table):
    spec = P.INEQUALITIES[iid]
    for N in range(0, 120, 7):
        assert P.inequality_sum(spec, N, table) == naive_sum(spec, N, table), N


@settings(max_examples=40)
@given(iid=st.sampled_from(sorted(P.INEQUALITIES)), N=st.integers(0, 300))
def test_extending_n_range_changes_nothing(iid, N):
    table = P.cached_table(400)
    spec = P.INEQUALITIES[iid]
    assert P.inequality_sum(spec, N, table, extra_n=2) == P.inequality_sum(spec, N, table)


@pytest.mark.parametrize("iid", sorted(P.INEQUALITIES))
def test_nonnegative_to_400(iid, table):
    rep = P.inequality_check(iid, 400, table)
    assert rep.ok and rep.values[0] == 1


def test_inequality_check_guards(table):
    with pytest.raises(CoverageError):
        P.inequality_check("thm-t4-1-a", 500, table)
    with pytest.raises(ValueError):
        P.inequality_check("thm-t4-1-a", -1)
    with pytest.raises(KeyError):
        P.get_inequality("nope")


@pytest.mark.parametrize("iid", sorted(P.BRIDGES))
def test_bridges(iid, table):
    rep = P.coefficient_nonnegativity_bridge(iid, 120, table)
    assert rep.ok, rep


def test_bridge_detects_wrong_identity(table, monkeypatch):
    monkeypatch.setitem(P.BRIDGES, "thm-t4-1-a", ("eq-5-2", (), 1))
    rep = P.coefficient_nonnegativity_bridge("thm-t4-1-a", 40, table)
    assert not rep.ok and rep.first_disagreement is not None
