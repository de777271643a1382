"""Smoke tests for the python bindings."""

from fractions import Fraction

import pytest

import ballotlab as bl


def test_linear_statistics():
    w = [5, 6, 4, 1, 3, 2, 7]
    assert bl.des(w) == 3
    assert bl.asc(w) == 3
    assert bl.height(w) == 0
    assert bl.depth(w) == 1
    assert bl.lowest_positions(w) == [4, 6]
    assert bl.pk([1, 4, 3, 2, 6, 5]) == 2
    assert bl.prefix_heights([1, 2, 3]) == [0, 1, 2]
    assert not bl.is_ballot([1, 4, 3, 2, 6, 5])
    assert bl.is_dyck([1, 3, 2])
    assert bl.reverse([3, 4, 1]) == [1, 4, 3]
    assert bl.standardize([2, 6, 5]) == [1, 3, 2]


def test_enumeration():
    assert len(bl.permutations(4)) == 24
    assert len(bl.ballot_permutations(5)) == 45
    assert bl.ballot_permutations(0) == [[]]
    with pytest.raises(Exception):
        bl.permutations(bl.enumeration_limit() + 1)


def test_cycles_and_m():
    assert bl.cycle_decomposition([2, 3, 1]) == [[1, 2, 3]]
    assert bl.is_odd_order([2, 3, 1])
    assert not bl.is_odd_order([2, 1])
    assert bl.m_stat([2, 3, 1]) == 1
    assert bl.cdes([1, 2, 3]) == 1
    assert bl.casc([1, 2, 3]) == 2


def test_exact_counts():
    assert bl.eulerian(4, 1) == 11
    assert bl.ballot_count(5) == 45
    assert bl.ballot_count(10) == 893025  # (9!!)^2
    assert bl.ballot_count(14) == 135135**2  # exceeds 32 bits
    assert bl.binomial(40, 20) == 137846528820
    assert bl.bnd_multinomial(5, 1) == 22


def test_phi_round_trip():
    assert bl.phi([3, 4, 1], [2, 6, 5]) == [1, 4, 3, 2, 6, 5]
    rho, tau = bl.split_at_first_lowest([1, 4, 3, 2, 6, 5])
    assert (rho, tau) == ([3, 4, 1], [2, 6, 5])
    for p in bl.permutations(5):
        r, t = bl.split_at_last_lowest(p)
        assert bl.phi(r, t) == p


def test_tables():
    rows = bl.stat_table(5, "ballot", ["des"])
    row5 = {r["values"]: r["count"] for r in rows if r["n"] == 5}
    assert row5 == {(0,): 1, (1,): 22, (2,): 22}

    odd = {r["values"]: r["count"] for r in bl.odd_order_table(5) if r["n"] == 5}
    assert odd == {(0,): 1, (1,): 22, (2,): 22}
    rec = {r["values"]: r["count"] for r in bl.spiro_recurrence_table(5) if r["n"] == 5}
    assert rec == odd


def test_series():
    b_des = bl.series("B_des", nx=5, nt=5)
    assert b_des[(5, 0, 1, 0)] == Fraction(22, 120)
    ballot = bl.series("ballot_count", nx=5, ny=0, nt=0, nz=0)
    assert ballot[(4, 0, 0, 0)] == Fraction(3, 8)
    with pytest.raises(Exception):
        bl.series("nope")


def test_verify_and_conjecture():
    reports = bl.verify("spiro", 5)
    assert all(r["status"] == "pass" for r in reports)
    assert any(i["name"] == "e17" for i in bl.identities())

    records = bl.conjecture(5)
    assert records and all(r["equal"] for r in records)
    assert any(r["n"] == 3 and r["d"] == 1 and r["lhs"] == 2 for r in records)
