"""Modular character table computation and its exact lifting."""

import pytest

from charcomb.cyclo import is_integer_constant
from charcomb.dixon import character_table, verify_table
from charcomb.groups import build_group

DEGREES = {
    ("GL", 2, 2): [1, 1, 2],
    ("SL", 2, 3): [1, 1, 1, 2, 2, 2, 3],
    ("GL", 3, 2): [1, 3, 3, 6, 7, 8],
    ("SL", 2, 5): [1, 2, 2, 3, 3, 4, 4, 5, 6],
    ("Sp", 4, 2): [1, 1, 5, 5, 5, 5, 9, 9, 10, 10, 16],
}


@pytest.mark.parametrize("key", sorted(DEGREES))
def test_frozen_degree_multisets(key):
    g = build_group(*key)
    tab = character_table(g)
    assert sorted(tab.degrees) == DEGREES[key]


@pytest.mark.parametrize("key", sorted(DEGREES))
def test_tables_verify(key):
    tab = character_table(build_group(*key))
    rep = verify_table(tab)
    assert rep["ok"], rep


def test_degree_squares_sum_to_order():
    g = build_group("SL", 2, 7)
    tab = character_table(g)
    assert sum(d * d for d in tab.degrees) == g.size


def test_trivial_character_is_all_ones():
    tab = character_table(build_group("GL", 3, 2))
    triv = tab.degrees.index(1)
    for k in range(tab.n_classes):
        assert is_integer_constant(tab.values[triv][k],
                                   tab.class_orders[k], 1)


def test_integer_value_raises_on_irrational():
    tab = character_table(build_group("GL", 3, 2))
    # the two degree-3 characters take irrational values on order-7 classes
    k7 = tab.class_orders.index(7)
    row3 = tab.degrees.index(3)
    with pytest.raises(ValueError):
        tab.integer_value(row3, k7)


def test_integer_rows_gl22():
    # GL_2(2) is S_3: every value is a rational integer
    tab = character_table(build_group("GL", 2, 2))
    rows = tab.integer_rows()
    assert sorted(r[0] for r in rows) == [1, 1, 2]


def test_generic_engine_agrees_with_vectorized():
    # build SL_2(3) twice: once through the packed matrix engine, once
    # as a plain element list driving the generic slow paths
    from itertools import product

    from charcomb.dixon import GroupData

    def mul(a, b):
        return tuple(
            tuple(sum(a[i][t] * b[t][j] for t in range(2)) % 3
                  for j in range(2)) for i in range(2))

    els = [((a, b), (c, d))
           for a, b, c, d in product(range(3), repeat=4)
           if (a * d - b * c) % 3 == 1]
    assert len(els) == 24
    gd = GroupData(els, mul)

    g = build_group("SL", 2, 3)
    assert gd.class_sizes == g.class_sizes
    assert gd.class_orders == g.class_orders

    ta = character_table(g)
    tb = character_table(gd)
    assert sorted(ta.degrees) == sorted(tb.degrees)
    assert sorted(map(tuple, ta.values)) == sorted(map(tuple, tb.values))


def test_corrupted_values_fail_verification():
    tab = character_table(build_group("GL", 2, 2))
    bad_values = [list(map(list, row)) for row in tab.values]
    bad_values[0][1][0] += 1

    class Wounded:
        pass

    w = Wounded()
    for name in ("group", "degrees", "class_sizes", "class_orders",
                 "class_reps", "inverse_class", "exponent", "n_classes"):
        setattr(w, name, getattr(tab, name))
    w.values = [tuple(map(tuple, row)) for row in bad_values]
    rep = verify_table(w)
    assert not rep["ok"]
    assert not rep["first_orthogonality"]
