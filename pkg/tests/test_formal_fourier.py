"""Formal sums and the transform stack over arrays.

The exhaustive operator sweep lives in the verification module; here we
pin a handful of concrete transforms and the algebraic identities that
make the sweep meaningful.
"""

from fractions import Fraction

from charcomb.arrays import arrays_with, parse_array
from charcomb.formal import FormalSum
from charcomb.fourier import (eps, fourier, fourier_e, fourier_unordered, op,
                              theta)


def test_formal_sum_algebra():
    a = FormalSum.unit("x", 2) + FormalSum.unit("y", Fraction(1, 3))
    b = a - FormalSum.unit("x", 2)
    assert a.coeff("x") == 2
    assert b.coeff("x") == 0
    assert len(b) == 1
    assert not FormalSum.zero()
    assert FormalSum.unit("x") + FormalSum.unit("x", -1) == FormalSum.zero()


def test_fourier_unit_frozen():
    s = fourier_unordered(FormalSum.unit(parse_array("{1|0}")))
    assert dict((str(k), c) for k, c in s) == {"{0|1}": 1}


def test_fourier_parity_split():
    x = parse_array("{0,2|1}")
    s = FormalSum.unit(x)
    assert fourier_e(s, 0) + fourier_e(s, 1) == fourier(s)


def test_fourier_squares_to_identity_on_odd_defect():
    # the unordered parity-0 transform is an involution on the odd span,
    # once inputs are read up to row swap
    from charcomb.arrays import Array, unordered_key
    for x in arrays_with(4, 4):
        if x.defect() % 2 == 0:
            continue
        canon = Array.from_masks(*unordered_key(x))
        t = fourier_unordered(fourier_unordered(FormalSum.unit(x)))
        assert t == FormalSum.unit(canon), str(x)


def test_sign_operators_are_involutions():
    xs = [x for x in arrays_with(4, 3)][:40]
    s = FormalSum((x, 1) for x in xs)
    assert theta(theta(s)) == s
    assert eps(eps(s)) == s
    assert op(op(s)) == s


def test_theta_scales_by_defect_parity():
    x = parse_array("{0,1,2|}")  # defect 3, odd
    assert theta(FormalSum.unit(x)).coeff(x) == -1
    y = parse_array("{1|0}")     # defect 0, even
    assert theta(FormalSum.unit(y)).coeff(y) == 1
