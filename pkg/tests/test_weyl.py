import math

from charcomb.weyl import (all_elements, brute_classes, centralizer_order,
                           class_list, class_size, cycle_type, delta,
                           delta_of_type, group_order, identity, inv, mul,
                           representative, type_d_elements)

# number of signed cycle types equals the number of bipartitions
CLASS_COUNTS = {1: 2, 2: 5, 3: 10, 4: 20, 5: 36}


def test_group_order():
    for n in range(1, 6):
        assert group_order(n) == 2 ** n * math.factorial(n)


def test_class_counts():
    for n, c in CLASS_COUNTS.items():
        assert len(class_list(n)) == c


def test_class_sizes_partition_the_group():
    for n in range(1, 5):
        assert sum(class_size(t) for t in class_list(n)) == group_order(n)


def test_centralizer_times_class_size():
    for n in range(1, 5):
        for t in class_list(n):
            assert class_size(t) * centralizer_order(t) == group_order(n)


def test_representative_has_declared_type():
    for n in range(1, 5):
        for t in class_list(n):
            assert cycle_type(representative(t)) == t


def test_brute_classes_agree_with_formulas():
    for n in (2, 3):
        buckets = brute_classes(n)
        assert set(buckets) == set(class_list(n))
        for t, members in buckets.items():
            assert len(members) == class_size(t)


def test_group_axioms_small():
    n = 3
    e = identity(n)
    elems = list(all_elements(n))
    assert len(elems) == group_order(n)
    w = elems[17]
    v = elems[5]
    assert mul(w, inv(w)) == e
    assert mul(e, w) == w
    # xy and yx are conjugate, and conjugation preserves type
    assert cycle_type(mul(v, w)) == cycle_type(mul(w, v))
    assert cycle_type(mul(mul(v, w), inv(v))) == cycle_type(w)


def test_delta_matches_type():
    for n in (2, 3):
        for t in class_list(n):
            assert delta(representative(t)) == delta_of_type(t)


def test_type_d_elements_have_even_delta():
    for n in (2, 3, 4):
        els = type_d_elements(n)
        assert len(els) == group_order(n) // 2
        assert all(delta(w) % 2 == 0 for w in els)
