"""Finite field tables and polynomial helpers."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from charcomb.gf import (char_poly, companion_matrix, factor_poly, field,
                         is_irreducible, mat_eval_poly, mat_identity, mat_mul,
                         monic_polys)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_field_axioms_exhaustive(q):
    F = field(q)
    els = range(q)
    for a in els:
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1
    # a few distributivity spot checks cover the table wiring
    for a in els:
        for b in els:
            assert F.mul(a, F.add(b, 1)) == F.add(F.mul(a, b), F.mul(a, 1))


def test_field_rejects_non_prime_power():
    with pytest.raises(ValueError):
        field(6)


def test_frobenius_fixed_field():
    # x -> x^p fixes exactly GF(p) inside GF(p^k)
    for q, p in ((4, 2), (8, 2), (9, 3)):
        F = field(q)
        fixed = [a for a in range(q) if F.pow(a, p) == a]
        assert len(fixed) == p


def test_multiplicative_generator_order():
    for q in (3, 4, 5, 7, 8, 9):
        F = field(q)
        g = F.multiplicative_generator()
        seen = set()
        x = 1
        for _ in range(q - 1):
            x = F.mul(x, g)
            seen.add(x)
        assert len(seen) == q - 1


def test_irreducible_counts():
    # number of monic irreducible quadratics over GF(q) is q(q-1)/2
    for q in (2, 3, 5):
        F = field(q)
        n = sum(1 for f in monic_polys(2, F) if is_irreducible(f, F))
        assert n == q * (q - 1) // 2


def test_factor_poly_round_trip():
    F = field(3)
    for f in monic_polys(3, F):
        if f[0] == 0:
            continue
        factors = factor_poly(f, F)
        deg = sum((len(g) - 1) * m for g, m in factors)
        assert deg == 3
        for g, _m in factors:
            assert is_irreducible(g, F)


def test_companion_charpoly_round_trip():
    F = field(2)
    f = (1, 1, 0, 1)  # x^3 + x + 1
    M = companion_matrix(f, F)
    assert char_poly(M, F) == f
    # Cayley-Hamilton
    Z = mat_eval_poly(f, M, F)
    assert all(v == 0 for row in Z for v in row)


def test_mat_mul_identity():
    F = field(4)
    I = mat_identity(3)
    M = ((1, 2, 0), (3, 1, 1), (0, 0, 2))
    assert mat_mul(M, I, F) == M
    assert mat_mul(I, M, F) == M


@given(st.integers(0, 8), st.integers(0, 8))
def test_gf9_commutativity(a, b):
    F = field(9)
    assert F.mul(a, b) == F.mul(b, a)
    assert F.add(a, b) == F.add(b, a)
