"""Smoke tests for the Python bindings."""

import pytest

import rootfrac as rf


def test_m_values():
    assert rf.m("pi", 1) == 7
    assert rf.m("e", 5) == 4
    assert rf.m("2", 10) == 13
    assert rf.m("4", 2) is None  # 4^(1/2) is an integer
    assert rf.m("17", 4) == 32


def test_n0_and_sequence():
    assert rf.n0("17") == 5
    assert rf.sequence("3/2", 1, 5) == [2, 4, 6, 9, 11]
    assert rf.sequence("2", 1, 3) == [None, 2, 3]


def test_table_formats():
    grid = rf.table("2", 1, 15)
    assert grid.startswith("inf [2] 3 5")
    csv = rf.table("2", 1, 3, format="csv")
    assert csv == "n,M\n1,inf\n2,2\n3,3\n"
    jl = rf.table("2", 1, 1, format="json-lines")
    assert '"m":null' in jl


def test_intervals_and_inverse():
    lo, hi = rf.nth_root_interval("2", 2, 64)
    from fractions import Fraction
    flo, fhi = Fraction(lo), Fraction(hi)
    assert flo < fhi
    assert flo ** 2 < 2 < fhi ** 2
    assert rf.inverse_range("17", 2) == (7, 9)
    assert rf.inverse_range("2", 4) == (None, None)


def test_periodicity_helpers():
    assert rf.threshold(3, 7) == 4
    assert rf.m_formula(3, 7, 6) == 13
    rows = rf.chi_table(3, 7)
    assert rows[0] == (0, 0, 3, "-1")
    assert rows[1][3] == "-4/3"
    assert rf.classify_beatty("e^3/7", 100) == "-1/2"


def test_checks_and_errors():
    assert rf.check_main_ineq("pi", 10)
    assert rf.m_prime("2", 2) == 2
    with pytest.raises(Exception):
        rf.Theta.parse("bogus")
    with pytest.raises(Exception):
        rf.chi_table(2, 4)
