"""The exhaustive operator-identity sweep at reduced caps.

The shipped acceptance checks run the full-size sweep; these tests pin
the reduced-cap statistics so a regression in enumeration or in either
identity moves a frozen number.
"""

from charcomb.asai import asai_verify

SMALL = dict(max_entry=4, max_union=4, d_max=4)


def test_small_sweep_passes_and_counts_are_stable():
    rep = asai_verify(**SMALL, threads=1)
    assert rep["ok"] is True
    assert rep["failures"] == []
    assert rep["checked"] == 781
    assert rep["counts"]["asai_i"] == 3124
    assert rep["counts"]["asai_ii"] == 3124
    assert rep["counts"]["fourier_op"] == 781
    assert rep["counts"]["re_op"] == 781
    assert rep["counts"]["hook_inclusion"] == 781


def test_flipped_variant_is_refuted():
    rep = asai_verify(**SMALL, threads=1)
    assert rep["counts"]["flipped_refuted"] >= 1


def test_threads_do_not_change_the_report():
    a = asai_verify(**SMALL, threads=1)
    b = asai_verify(**SMALL, threads=2)
    for key in ("checked", "counts", "ok"):
        assert a[key] == b[key]


def test_lemmas_can_be_skipped():
    rep = asai_verify(**SMALL, include_lemmas=False, threads=1)
    assert rep["ok"] is True
    assert rep["counts"]["fourier_op"] == 0


def test_bad_caps_are_rejected():
    import pytest
    with pytest.raises(ValueError):
        asai_verify(max_entry=-1)
