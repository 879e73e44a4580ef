"""Explicit matrix group construction: orders, classes, element calculus."""

import pytest

from charcomb.gf import field, mat_mul
from charcomb.groups import (ORDER_CAP, build_group, coxeter_torus_generator,
                             cycle_data, group_order, regular_semisimple,
                             support)

FROZEN = [
    # family, n, q, order, classes, exponent
    ("SL", 2, 3, 24, 7, 12),
    ("GL", 2, 2, 6, 3, 6),
    ("GL", 2, 3, 48, 8, 24),
    ("GL", 3, 2, 168, 6, 84),
    ("SL", 2, 5, 120, 9, 60),
    ("Sp", 4, 2, 720, 11, 60),
    ("SL", 2, 9, 720, 13, 120),
]


@pytest.mark.parametrize("family,n,q,order,classes,exponent", FROZEN)
def test_frozen_group_data(family, n, q, order, classes, exponent):
    g = build_group(family, n, q)
    assert g.size == order == group_order(family, n, q)
    assert len(g.classes) == classes
    assert g.exponent() == exponent


def test_class_sizes_partition_group():
    g = build_group("SL", 3, 2)
    assert sum(g.class_sizes) == g.size
    assert g.class_sizes[0] == 1
    assert g.class_orders[0] == 1


def test_class_size_divides_order():
    g = build_group("GL", 2, 4)
    for s in g.class_sizes:
        assert g.size % s == 0


def test_inverse_and_mul_consistency():
    g = build_group("SL", 2, 5)
    e = g.key_of(((1, 0), (0, 1)))
    for k in (g._keys[3], g._keys[40], g._keys[77]):
        k = int(k)
        assert g.mul(k, g.inverse(k)) == e
        assert g.order_of(k) == g.class_orders[g.class_of_element(k)]


def test_class_matrix_counts_columns_sum_to_class_size():
    g = build_group("SL", 2, 3)
    r = len(g.classes)
    for i in range(r):
        counts = g.class_matrix_counts(i)
        assert counts.shape == (r, r)
        # each column distributes the |C_i| products x^-1 * rep_k
        assert list(counts.sum(axis=0)) == [g.class_sizes[i]] * r


def test_conjugates_share_class():
    g = build_group("GL", 3, 2)
    k = int(g._keys[29])
    c = g.class_of_element(k)
    for h in (int(g._keys[3]), int(g._keys[100]), int(g._keys[166])):
        conj = g.mul(g.mul(h, k), g.inverse(h))
        assert g.class_of_element(conj) == c


def test_order_cap_enforced():
    with pytest.raises(ValueError):
        build_group("GL", 4, 4)
    assert group_order("GL", 4, 4) > ORDER_CAP


def test_symplectic_form_is_preserved():
    # closure itself asserts this; rebuild a small case to exercise it
    g = build_group("Sp", 4, 3)
    assert g.size == 51840
    assert len(g.classes) == 34


def test_support_values():
    q = 2
    ident = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    transvection = ((1, 1, 0), (0, 1, 0), (0, 0, 1))
    assert support(ident, q) == 0
    assert support(transvection, q) == 1


def test_support_is_conjugation_invariant():
    g = build_group("GL", 3, 2)
    F = field(2)
    k = int(g._keys[42])
    m = g.mat_of(k)
    s0 = support(m, 2)
    for hk in (g._keys[7], g._keys[19], g._keys[111]):
        h = g.mat_of(int(hk))
        hinv = g.mat_of(g.inverse(int(hk)))
        conj = mat_mul(mat_mul(h, m, F), hinv, F)
        assert support(conj, 2) == s0


def test_cycle_data_orders_factors():
    m = ((0, 1, 0), (0, 0, 1), (1, 1, 0))
    data = cycle_data(m, 2)
    assert sum(d * mult for d, mult in data) == 3


def test_regular_semisimple_detection():
    # an irreducible characteristic polynomial forces multiplicity one
    m = ((0, 0, 1), (1, 0, 0), (0, 1, 1))
    assert cycle_data(m, 2) == ((3, 1),)
    assert regular_semisimple(m, 2)
    transvection = ((1, 1, 0), (0, 1, 0), (0, 0, 1))
    assert not regular_semisimple(transvection, 2)


def test_coxeter_torus_generator():
    for p, q in ((3, 2), (3, 3), (2, 5)):
        t = coxeter_torus_generator(p, q)
        g = build_group("GL", p, q)
        k = g.key_of(t)
        want = (q ** p - 1) // (q - 1)
        assert g.order_of(k) == want
        assert regular_semisimple(t, q)
