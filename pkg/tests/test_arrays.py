"""Array parsing, rank/defect statistics, similarity, and the special map."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from charcomb.arrays import (Array, array_defect, array_rank, arrays_with,
                             count_arrays, parse_array, similarity_class,
                             special_array, unordered_key)


def test_parse_round_trip():
    for text in ("{1|0}", "{0,2|1}", "{|0,1,2}", "{0,1,3|2}", "{|}"):
        assert str(parse_array(text)) == text


def test_parse_normalizes_order():
    assert str(parse_array("{2,0|1}")) == "{0,2|1}"


def test_parse_rejects_duplicates():
    with pytest.raises(ValueError):
        parse_array("{0,0|1}")


def test_parse_rejects_garbage():
    for bad in ("{0,1}", "0|1", "{0|1|2}", "{a|b}"):
        with pytest.raises(ValueError):
            parse_array(bad)


@pytest.mark.parametrize("text,rank,defect", [
    ("{1|0}", 1, 0),
    ("{0,2|1}", 2, 1),
    ("{0,1,3|2}", 4, 2),
    ("{|0,1,2}", 2, -3),
    ("{0,1,2|}", 2, 3),
    ("{|}", 0, 0),
])
def test_rank_defect_values(text, rank, defect):
    x = parse_array(text)
    assert array_rank(x) == rank
    assert array_defect(x) == defect


def test_reduce_is_idempotent_and_preserves_rank():
    x = parse_array("{1,3|2,4}")
    r = x.reduce()
    assert r.is_reduced()
    assert r.reduce() == r
    assert array_rank(r) == array_rank(x)
    assert array_defect(r) == array_defect(x)


def test_shift_changes_rank_predictably():
    # one shift of a defect-d array of size s adds floor((s+1)... nothing
    # we hard-code: shifting {0,2|1} once keeps rank + defect behaviour
    x = parse_array("{0,2|1}")
    y = x.shift(1)
    assert array_defect(y) == array_defect(x)
    assert y.reduce() == x.reduce()


def test_similarity_class_frozen():
    members = similarity_class(parse_array("{0,2|1}"))
    assert len(members) == 8
    assert sorted(str(m) for m in members) == [
        "{0,1,2|}", "{0,1|2}", "{0,2|1}", "{0|1,2}",
        "{1,2|0}", "{1|0,2}", "{2|0,1}", "{|0,1,2}"]


def test_similarity_members_share_rank_and_defect_parity():
    x = parse_array("{0,1,3|2}")
    for m in similarity_class(x):
        assert array_rank(m) == array_rank(x)
        assert array_defect(m) % 2 == array_defect(x) % 2


def test_special_array_is_special_and_similar():
    x = parse_array("{1,2|0}")
    sp = special_array(x)
    assert sp in similarity_class(x)
    # the special member interleaves the two rows
    assert str(sp) == "{0,2|1}"
    assert array_defect(sp) in (0, 1)


def test_special_fixed_point():
    sp = special_array(parse_array("{0,2|1}"))
    assert special_array(sp) == sp


def test_unordered_key_symmetry():
    x = parse_array("{0,2|1}")
    assert unordered_key(x) == unordered_key(x.opposite())


def test_count_arrays_matches_enumeration():
    for me, mu in ((3, 3), (4, 3), (4, 4)):
        xs = list(arrays_with(me, mu))
        assert len(xs) == count_arrays(me, mu)
        assert len({(x.m0, x.m1) for x in xs}) == len(xs)


entries = st.lists(st.integers(min_value=0, max_value=9),
                   unique=True, max_size=5)


@given(entries, entries)
def test_rank_defect_invariant_under_shift(top, bottom):
    x = Array(top, bottom)
    y = x.shift(2)
    assert array_rank(y) == array_rank(x)
    assert array_defect(y) == array_defect(x)


@given(entries, entries)
def test_opposite_flips_defect(top, bottom):
    x = Array(top, bottom)
    assert array_defect(x.opposite()) == -array_defect(x)
    assert array_rank(x.opposite()) == array_rank(x)
