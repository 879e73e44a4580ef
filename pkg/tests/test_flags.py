from fractions import Fraction

import pytest

from charcomb.flags import (brute_flag_count, brute_stable_flag_count,
                            chain_count, flag_bounds_ok, flag_count,
                            flag_count_product, flag_dimension,
                            flag_ratio_ok, gaussian_binomial,
                            level_char_value, split_semisimple_matrix,
                            stable_count_report, stable_flag_count,
                            type_of_content)


def test_gaussian_binomial_basics():
    assert gaussian_binomial(4, 2, 2) == 35
    assert gaussian_binomial(5, 1, 3) == 121
    for n in range(7):
        for k in range(n + 1):
            assert gaussian_binomial(n, k, 2) == gaussian_binomial(n, n - k, 2)
    assert gaussian_binomial(3, 5, 2) == 0


def test_gaussian_binomial_pascal_recurrence():
    for q in (2, 3):
        for n in range(1, 8):
            for k in range(1, n):
                lhs = gaussian_binomial(n, k, q)
                rhs = (gaussian_binomial(n - 1, k - 1, q)
                       + q ** k * gaussian_binomial(n - 1, k, q))
                assert lhs == rhs


def test_flag_count_small_frozen():
    assert flag_count((1,), 3, 2) == 7          # points of P^2
    assert flag_count((1, 2), 3, 2) == 21       # full flags in F_2^3
    assert flag_count((2,), 4, 3) == 130        # planes in F_3^4
    assert flag_count((1, 2), 6, 2) == 1953


def test_flag_count_routes_agree():
    for q in (2, 3, 5):
        for n in range(1, 7):
            for a in ((1,), (2,), (1, 2), (1, 3), (2, 3), (1, 2, 3)):
                if a[-1] >= n:
                    continue
                assert flag_count_product(a, n, q) == flag_count(a, n, q)


def test_flag_count_brute_force():
    for q in (2, 3):
        for n in (2, 3, 4):
            for a in ((1,), (1, 2), (2,)):
                if a[-1] >= n:
                    continue
                assert brute_flag_count(a, n, q) == flag_count(a, n, q)


def test_flag_bounds_and_ratio():
    for q in (2, 3, 4, 5):
        for n in (4, 9, 17):
            for a in ((1,), (1, 3), (2, 3), (1, 2, 3)):
                assert flag_bounds_ok(a, n, q)
                assert flag_ratio_ok(a, n, q)


def test_flag_dimension():
    assert flag_dimension((1,), 3) == 2
    assert flag_dimension((1, 2), 3) == 3
    assert flag_dimension((1, 2), 6) == 9


def test_type_of_content():
    assert type_of_content((1, 1, 1)) == (1, 2)
    assert type_of_content((2, 1)) == (1,)
    assert type_of_content((3,)) == ()
    assert type_of_content((2, 2, 1)) == (1, 3)


def test_chain_count_single_step_is_binomial():
    assert chain_count(4, (2,), 2) == gaussian_binomial(4, 2, 2)


def test_stable_count_identity_matrix_recovers_plain_count():
    for q in (2, 3):
        for a in ((1,), (1, 2)):
            n = 4
            assert stable_flag_count([("1", n)], a, q) == flag_count(a, n, q)


def test_stable_count_brute_force():
    for q in (3, 4):
        for eig in ([("1", 3), ("c", 1)], [("1", 2), ("c", 2)]):
            n = sum(m for _, m in eig)
            for a in ((1,), (1, 2)):
                g = split_semisimple_matrix(eig, q)
                assert (brute_stable_flag_count(g, a, q)
                        == stable_flag_count(eig, a, q))


def test_stable_report_keys():
    rep = stable_count_report([("1", 5), ("c", 1)], (1, 2), 3)
    assert rep["count"] == 5082
    assert rep["supp"] == 1
    assert rep["epsilon"] == Fraction(1, 26)
    assert isinstance(rep["within_half_power"], bool)


def test_split_matrix_needs_enough_scalars():
    with pytest.raises(ValueError):
        split_semisimple_matrix([("1", 2), ("c", 1)], 2)


def test_level_char_degree_specialization():
    # evaluating at the identity eigenvalue structure gives the closed form
    from charcomb.degrees import unip_degree_A
    for q in (2, 3):
        for lam in ((4, 2), (3, 3), (5, 1), (4, 1, 1)):
            n = sum(lam)
            assert (level_char_value(lam, [("1", n)], q)
                    == unip_degree_A(lam, q))


def test_level_char_frozen_value():
    assert level_char_value((4, 2), [("1", 5), ("c", 1)], 3) == 1209
