"""Fourier transform on formal sums of arrays, and the sign operators.

    R(X)   = s(X)^{-1} * sum over Y in Sim(X) of (-1)^{<X#, Y#>} Y
    R_e(X) = the same sum restricted to Y with |Y#| congruent to e mod 2
    Theta(X) = (-1)^{Def(X)} X
    eps(X)   = (-1)^{d(X)} X
    op(X)    = X with rows swapped

where Y# = bottom(Y) symdiff bottom(Y_sp); members of one similarity class
share the same special array, so Y# ranges over all subsets of X^sdiff as Y
ranges over Sim(X).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .arrays import (
    Array, d_of_mm, defect_mm, s_exponent_mm, sharp_mm, sim_members_mm,
    special_mm, unordered_key, unordered_key_mm,
)
from .formal import FormalSum


@lru_cache(maxsize=None)
def fourier_terms_mm(m0: int, m1: int) -> tuple[tuple[int, int, int, int], ...]:
    """Integer-scaled Fourier expansion of one array.

    Returns tuples (sign, sharp_parity, y0, y1): coefficient of (y0, y1) in
    s(X) * R(X) is sign, and sharp_parity = |Y#| mod 2 classifies the term
    into R_0 / R_1.
    """
    x_sharp = sharp_mm(m0, m1)
    _, sp1 = special_mm(m0, m1)
    out = []
    for y0, y1 in sim_members_mm(m0, m1):
        y_sharp = y1 ^ sp1
        sign = -1 if (x_sharp & y_sharp).bit_count() & 1 else 1
        out.append((sign, y_sharp.bit_count() & 1, y0, y1))
    return tuple(out)


def fourier(s: FormalSum) -> FormalSum:
    total: dict = {}
    for x, c in s:
        scale = Fraction(c, 1 << s_exponent_mm(x.m0, x.m1))
        for sign, _, y0, y1 in fourier_terms_mm(x.m0, x.m1):
            k = Array.from_masks(y0, y1)
            v = total.get(k, 0) + sign * scale
            if v:
                total[k] = v
            else:
                del total[k]
    return FormalSum(total)


def fourier_e(s: FormalSum, e: int) -> FormalSum:
    if e not in (0, 1):
        raise ValueError("parity e must be 0 or 1")
    total: dict = {}
    for x, c in s:
        scale = Fraction(c, 1 << s_exponent_mm(x.m0, x.m1))
        for sign, par, y0, y1 in fourier_terms_mm(x.m0, x.m1):
            if par != e:
                continue
            k = Array.from_masks(y0, y1)
            v = total.get(k, 0) + sign * scale
            if v:
                total[k] = v
            else:
                del total[k]
    return FormalSum(total)


def theta(s: FormalSum) -> FormalSum:
    return FormalSum(
        (x, -c if defect_mm(x.m0, x.m1) & 1 else c) for x, c in s)


def eps(s: FormalSum) -> FormalSum:
    return FormalSum((x, -c if d_of_mm(x.m0, x.m1) & 1 else c) for x, c in s)


def op(s: FormalSum) -> FormalSum:
    return FormalSum((x.opposite(), c) for x, c in s)


def fourier_unordered(s: FormalSum, e: int = 0) -> FormalSum:
    """Parity-e Fourier transform descended to unordered symbols.

    Keys of the result are canonical-orientation arrays, so composing the
    map with itself makes sense.  On the odd-defect span with e = 0 the
    composition is the identity (the transform is a self-dual Fourier
    transform on even-size subsets of X-sdiff).
    """
    acc: dict = {}
    for x, c in s:
        scale = Fraction(c, 1 << s_exponent_mm(x.m0, x.m1))
        for sign, par, y0, y1 in fourier_terms_mm(x.m0, x.m1):
            if par != (e & 1):
                continue
            key = Array.from_masks(*unordered_key_mm(y0, y1))
            v = acc.get(key, 0) + (scale if sign > 0 else -scale)
            if v:
                acc[key] = v
            else:
                acc.pop(key, None)
    return FormalSum(acc)


def unordered_projection(s: FormalSum) -> FormalSum:
    """Project a sum of arrays onto unordered symbols (reduce, forget order).

    Keys of the result are canonical mask pairs as produced by unordered_key.
    """
    return FormalSum((unordered_key(x), c) for x, c in s)
