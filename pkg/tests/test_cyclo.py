from fractions import Fraction

from charcomb.cyclo import (circular_mul, embed, is_integer_constant,
                            phi_coeffs, reduce_mod_phi,
                            scaled_sum_is_integer_vector)


def test_phi_coeffs_small():
    assert phi_coeffs(1) == (-1, 1)
    assert phi_coeffs(2) == (1, 1)
    assert phi_coeffs(3) == (1, 1, 1)
    assert phi_coeffs(4) == (1, 0, 1)
    assert phi_coeffs(6) == (1, -1, 1)


def test_embed_reindexes_exponents():
    # x in order 3 becomes x^2 in order 6
    assert embed((1, 2), 3, 6) == [1, 0, 2, 0, 0, 0]
    assert embed((5,), 1, 4) == [5, 0, 0, 0]


def test_circular_mul_wraps():
    assert circular_mul((0, 1), (0, 1), 4) == (0, 0, 1, 0)
    assert circular_mul((0, 0, 0, 1), (0, 0, 1, 0), 4) == (0, 1, 0, 0)


def test_circular_mul_big_coefficients():
    # the overflow guard reroutes through exact python integers
    big = tuple([10 ** 14] * 4)
    out = circular_mul(big, big, 4)
    assert out == tuple([4 * 10 ** 28] * 4)


def test_root_of_unity_sums():
    for o in (2, 3, 4, 5, 6, 12):
        all_roots = tuple([1] * o)
        assert is_integer_constant(all_roots, o, 0)
    assert is_integer_constant((1, 1, 1), 3, 0)
    assert not is_integer_constant((1, 1, 0), 3, 0)
    assert is_integer_constant((7,) + (0,) * 5, 6, 7)


def test_reduce_mod_phi():
    assert reduce_mod_phi((0, 0, 0, 0, 1), 5) == (-1, -1, -1, -1)
    assert reduce_mod_phi((2, 0, 0), 3) == (2, 0)


def test_scaled_sum_integer_detection():
    e = 4
    half = Fraction(1, 2)
    terms = [(half, (2, 0, 0, 0)), (half, (4, 0, 0, 0))]
    assert scaled_sum_is_integer_vector(terms, e) == 3
    # i/2 + i/2 = i is an algebraic integer but not rational
    terms_i = [(half, (0, 1, 0, 0)), (half, (0, 1, 0, 0))]
    assert scaled_sum_is_integer_vector(terms_i, e) is None
