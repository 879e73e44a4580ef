"""Class algebra consequences: structure constants, induced characters,
cuspidal supports, and the two computed coverage statements."""

import pytest

from charcomb.classalg import (borel_constituent_degrees, borel_permutation_character,
                               cancel_verify, constituents, convolution_counts,
                               cuspidal_set, flag_rows_round_trip,
                               frobenius_count, frobenius_matches_convolution,
                               syt_count, thompson_coverage, unipotent_rows)
from charcomb.dixon import character_table
from charcomb.groups import build_group, coxeter_torus_generator


def test_frobenius_full_sweep_sl23():
    g = build_group("SL", 2, 3)
    tab = character_table(g)
    r = len(g.classes)
    for i in range(r):
        conv = {j: convolution_counts(g, i, j) for j in range(r)}
        for j in range(r):
            for k in range(r):
                fc = frobenius_count(tab, i, j, k)
                assert fc * g.class_sizes[k] == int(conv[j][k])


def test_frobenius_matches_convolution_gl32():
    g = build_group("GL", 3, 2)
    assert frobenius_matches_convolution(g, character_table(g))


def test_borel_character_values_gl32():
    g = build_group("GL", 3, 2)
    pi = borel_permutation_character(g)
    assert list(pi) == [21, 5, 0, 0, 1, 0]


def test_borel_constituents_gl32():
    g = build_group("GL", 3, 2)
    tab = character_table(g)
    assert borel_constituent_degrees(g, tab) == [1, 6, 8]
    pi = borel_permutation_character(g)
    mult = constituents(tab, pi)
    # multiplicities are the standard tableaux counts
    assert sorted(mult.values()) == [1, 1, 2]
    degs = {tab.degrees[row]: m for row, m in mult.items()}
    assert degs == {1: 1, 6: 2, 8: 1}
    assert sum(tab.degrees[row] * m for row, m in mult.items()) == 21


def test_borel_constituents_match_rank2_table():
    # the reflection-group degrees reappear as constituent degrees
    from charcomb.degrees import degree_of, enumerate_symbols
    for q in (2, 3):
        g = build_group("Sp", 4, q)
        tab = character_table(g)
        got = sorted(borel_constituent_degrees(g, tab))
        want = sorted(
            int(degree_of(e, q, "odd")) for e in enumerate_symbols(2, "odd")
            if abs(e.defect()) == 1)
        assert got == want


def test_unipotent_rows_gl32():
    rows = unipotent_rows(build_group("GL", 3, 2))
    assert rows[(3,)] == [1, 1, 1, 1, 1, 1]
    assert rows[(2, 1)] == [6, 2, -1, -1, 0, 0]
    assert rows[(1, 1, 1)] == [8, 0, 1, 1, 0, -1]


def test_unipotent_rows_are_table_rows():
    from charcomb.classalg import match_table_row
    for family, n, q in (("GL", 2, 2), ("GL", 2, 3), ("GL", 3, 2)):
        g = build_group(family, n, q)
        tab = character_table(g)
        for lam, row in unipotent_rows(g).items():
            assert match_table_row(tab, row) is not None, lam


def test_flag_rows_round_trip():
    for family, n, q in (("GL", 2, 3), ("GL", 3, 2)):
        assert flag_rows_round_trip(build_group(family, n, q))


def test_syt_count_values():
    assert syt_count((1, 1, 1)) == 1
    assert syt_count((2, 1)) == 2
    assert syt_count((3, 2)) == 5
    assert syt_count((2, 2, 1)) == 5


def test_cuspidal_sets():
    g2 = build_group("GL", 2, 2)
    t2 = character_table(g2)
    cs = cuspidal_set(g2, t2)
    assert [t2.degrees[i] for i in cs] == [1]   # the sign character
    g3 = build_group("GL", 3, 2)
    t3 = character_table(g3)
    cs3 = cuspidal_set(g3, t3)
    assert sorted(t3.degrees[i] for i in cs3) == [3, 3]
    # the trivial character is never cuspidal
    triv = t3.degrees.index(1)
    assert triv not in cs3


def test_cuspidal_count_closed_form():
    # (q^3 - q) / 3 cuspidal characters for the degree-3 general linear group
    for q in (2, 3, 4):
        g = build_group("GL", 3, q)
        tab = character_table(g)
        assert len(cuspidal_set(g, tab)) == (q ** 3 - q) // 3


# one instance per central scalar of order dividing p, so one at q = 2
# and q = 3 but three once the scalar group has order divisible by 3
@pytest.mark.parametrize("p,q,expected", [
    (3, 2, [-9]),
    (3, 3, [-96]),
    (3, 4, [-405, -405, -405]),
])
def test_cancellation_identity(p, q, expected):
    rep = cancel_verify(p, q)
    assert rep["ok"]
    assert rep["values"] == expected
    assert rep["expected"] == expected[0]


def test_thompson_coverage_frozen():
    # degree-3 special linear over GF(2): identity and the order-4 class
    # stay uncovered; over GF(3) only the identity does
    g = build_group("SL", 3, 2)
    tab = character_table(g)
    tc = g.class_of_element(g.key_of(coxeter_torus_generator(3, 2)))
    cov = thompson_coverage(g, tab, tc)
    uncov = [(g.class_sizes[k], g.class_orders[k])
             for k, c in enumerate(cov) if not c]
    assert uncov == [(1, 1), (42, 4)]

    g3 = build_group("SL", 3, 3)
    t3 = character_table(g3)
    tc3 = g3.class_of_element(g3.key_of(coxeter_torus_generator(3, 3)))
    cov3 = thompson_coverage(g3, t3, tc3)
    uncov3 = [(g3.class_sizes[k], g3.class_orders[k])
              for k, c in enumerate(cov3) if not c]
    assert uncov3 == [(1, 1)]


def test_thompson_agrees_with_convolution():
    g = build_group("SL", 3, 2)
    tab = character_table(g)
    tc = g.class_of_element(g.key_of(coxeter_torus_generator(3, 2)))
    cov = thompson_coverage(g, tab, tc)
    conv = convolution_counts(g, tc, tc)
    assert cov == [bool(c) for c in conv]
