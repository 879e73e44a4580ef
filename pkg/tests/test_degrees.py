from fractions import Fraction

import pytest

from charcomb.arrays import parse_array
from charcomb.degrees import (audit_degree_chain_A, audit_degree_chain_BCD,
                              count_degree_at_most, degree_of,
                              enumerate_symbols, floor_square_identity,
                              is_prime_power, product_bounds_ok,
                              qhook_degree_A, unip_degree_A,
                              unip_degree_BCD)


def test_prime_power_detector():
    yes = {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 121}
    no = {1, 6, 10, 12, 15, 100}
    assert all(is_prime_power(q) for q in yes)
    assert not any(is_prime_power(q) for q in no)


def test_degree_A_extremes():
    for q in (2, 3, 5):
        for n in (1, 2, 3, 4, 6):
            assert unip_degree_A((n,), q) == 1
            assert unip_degree_A(tuple([1] * n), q) == q ** (n * (n - 1) // 2)


@pytest.mark.parametrize("lam,q,deg", [
    ((2, 1), 2, 6),      # q(q+1)
    ((3, 1), 2, 14),     # q(q^2+q+1)
    ((2, 2), 2, 20),     # q^2(q^2+1)
    ((2, 1), 3, 12),
    ((2, 2), 3, 90),
    ((7, 1), 2, 254),
])
def test_degree_A_frozen(lam, q, deg):
    assert unip_degree_A(lam, q) == deg


def test_degree_A_routes_agree():
    from charcomb.combinat import partitions
    for q in (2, 3):
        for n in range(1, 8):
            for lam in partitions(n):
                assert unip_degree_A(lam, q) == qhook_degree_A(lam, q)


def test_degree_A_twisted_sign():
    # the eps = -1 evaluation stays a positive integer
    for lam in ((2, 1), (3, 1), (2, 2), (3, 2, 1)):
        for q in (2, 3, 4):
            d = unip_degree_A(lam, q, eps=-1)
            assert isinstance(d, int) and d > 0


def test_rank2_odd_defect_degrees():
    # rank-2 odd symbols at q = 2: principal series 1,1(cuspidal),5,5,9,16
    degs = sorted(degree_of(e, 2, "odd") for e in enumerate_symbols(2, "odd"))
    assert degs == [1, 1, 5, 5, 9, 16]
    degs3 = sorted(degree_of(e, 3, "odd") for e in enumerate_symbols(2, "odd"))
    assert degs3 == [1, 6, 15, 15, 24, 81]


def test_cuspidal_rank2_closed_form():
    sym = parse_array("{0,1,2|}")
    for q in (2, 3, 4, 5):
        dv = unip_degree_BCD(sym, q)
        assert dv.value == Fraction(q * (q - 1) ** 2, 2)
        assert dv.integral


def test_even_defect_can_be_half_integral():
    vals = [degree_of(e, 2, "even") for e in enumerate_symbols(3, "even")]
    assert any(v.denominator == 2 for v in vals)
    assert all(v > 0 for v in vals)


def test_enumeration_sizes():
    assert len(enumerate_symbols(8, "A")) == 22
    assert len(enumerate_symbols(2, "odd")) == 6
    assert len(enumerate_symbols(1, "odd")) == 2


def test_count_report_frozen():
    rep = count_degree_at_most("A", 8, 2, 4096)
    assert rep["total"] == 22
    assert rep["count"] == 2
    assert rep["audits_ok"] is True
    assert abs(rep["c_prime"] - 2 / 3) < 1e-12


def test_degree_chain_audits():
    for q in (2, 3):
        assert audit_degree_chain_A((3, 1), q)["ok"]
        assert audit_degree_chain_A((2, 2, 1), q)["ok"]
        for text in ("{0,2|1}", "{0,1|2}", "{0,1,2|}"):
            assert audit_degree_chain_BCD(parse_array(text), q)["ok"]


def test_floor_square_identity_range():
    assert all(floor_square_identity(m) for m in range(0, 60))


def test_product_bounds():
    for q in (2, 3, 4, 5):
        assert product_bounds_ok(q)
