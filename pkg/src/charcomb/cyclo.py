"""Exact arithmetic in rings of roots of unity.

Character values are carried as integer coefficient vectors in
Z[x]/(x^o - 1) with o the order of the class representative.  Identities
between them (orthogonality, counting formulas) are decided exactly by
embedding everything into Z[x]/(x^e - 1) for the group exponent e and
reducing modulo the e-th cyclotomic polynomial, whose quotient ring is
Z[zeta_e].  No floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import numpy as np
from sympy import cyclotomic_poly, symbols

_x = symbols("x")


@lru_cache(maxsize=None)
def phi_coeffs(o: int) -> tuple[int, ...]:
    """Coefficients of the o-th cyclotomic polynomial, constant term first."""
    from sympy import Poly
    return tuple(int(c) for c in reversed(Poly(cyclotomic_poly(o, _x), _x).all_coeffs()))


@lru_cache(maxsize=None)
def _reduction_rows(e: int) -> tuple[tuple[int, ...], ...]:
    """Row m is x^{phi+m} reduced mod Phi_e, as a length-phi vector."""
    phi = phi_coeffs(e)
    deg = len(phi) - 1
    # x^deg = -(phi_0 + phi_1 x + ... + phi_{deg-1} x^{deg-1})
    top = [-c for c in phi[:deg]]
    rows = [tuple(top)]
    for _ in range(e - deg - 1):
        prev = rows[-1]
        shifted = [0] + list(prev[:-1])
        spill = prev[-1]
        if spill:
            shifted = [s + spill * t for s, t in zip(shifted, top)]
        rows.append(tuple(shifted))
    return tuple(rows)


@lru_cache(maxsize=None)
def _reduction_matrix_np(e: int):
    rows = _reduction_rows(e)
    m = np.array(rows, dtype=np.int64)
    bound = int(np.abs(m).max()) if m.size else 0
    return m, bound


def reduce_mod_phi(vec, e: int) -> tuple[int, ...]:
    """Reduce a length-e integer vector mod Phi_e; exact, overflow-safe."""
    deg = len(phi_coeffs(e)) - 1
    head = list(vec[:deg]) + [0] * max(0, deg - len(vec))
    tail = list(vec[deg:e])
    if not tail or not any(tail):
        return tuple(int(h) for h in head)
    rows, bound = _reduction_matrix_np(e)
    mx = max(abs(int(t)) for t in tail)
    if bound and mx and mx * bound * len(tail) < (1 << 62):
        extra = np.asarray(tail, dtype=np.int64) @ rows[:len(tail)]
        return tuple(int(h) + int(v) for h, v in zip(head, extra))
    red = _reduction_rows(e)
    out = [int(h) for h in head]
    for m, t in enumerate(tail):
        if t:
            row = red[m]
            for i, c in enumerate(row):
                out[i] += int(t) * c
    return tuple(out)


def embed(poly, o: int, e: int) -> list[int]:
    """Image of Z[x]/(x^o - 1) in Z[x]/(x^e - 1): x^j -> x^{j e/o}."""
    if e % o:
        raise ValueError(f"order {o} does not divide exponent {e}")
    step = e // o
    out = [0] * e
    for j, c in enumerate(poly):
        if c:
            out[(j * step) % e] += int(c)
    return out


def circular_mul(p1, p2, o: int) -> tuple[int, ...]:
    """Product in Z[x]/(x^o - 1)."""
    a = np.asarray(p1, dtype=np.int64)
    b = np.asarray(p2, dtype=np.int64)
    mx = int(np.abs(a).max(initial=0)) * int(np.abs(b).max(initial=0)) * o
    if mx < (1 << 62):
        full = np.convolve(a, b)
        out = np.zeros(o, dtype=np.int64)
        for i in range(len(full)):
            out[i % o] += full[i]
        return tuple(int(v) for v in out)
    out_py = [0] * o
    for i, c1 in enumerate(p1):
        if c1:
            for j, c2 in enumerate(p2):
                if c2:
                    out_py[(i + j) % o] += int(c1) * int(c2)
    return tuple(out_py)


def is_integer_constant(poly, o: int, value: int) -> bool:
    """Whether the vector represents the rational integer `value` in
    Z[zeta_o]: Phi_o must divide poly - value exactly."""
    work = [int(c) for c in poly] + [0] * max(0, o - len(poly))
    work[0] -= value
    phi = list(phi_coeffs(o))
    deg = len(phi) - 1
    # synthetic division by the monic Phi_o, highest power first
    for m in range(len(work) - 1, deg - 1, -1):
        c = work[m]
        if c:
            for i, pc in enumerate(phi):
                work[m - deg + i] -= c * pc
    return not any(work[:deg])


def scaled_sum_is_integer_vector(terms, e: int):
    """Given (coefficient: Fraction, vec: length-e ints) terms, reduce the
    Fraction-weighted sum mod Phi_e; returns the constant if the result is
    a rational integer constant, else None."""
    deg = len(phi_coeffs(e)) - 1
    acc = [Fraction(0)] * deg
    for coeff, vec in terms:
        red = reduce_mod_phi(vec, e)
        for i, v in enumerate(red):
            if v:
                acc[i] += coeff * v
    if any(acc[1:]):
        return None
    c = acc[0]
    if c.denominator != 1:
        return None
    return int(c)


@lru_cache(maxsize=None)
def trace_vector(e: int) -> tuple[int, ...]:
    """tr[m] = Tr_{Q(zeta_e)/Q}(zeta_e^m), a Ramanujan sum over units.

    An element v of Z[x]/(x^e - 1) represents the rational integer w
    exactly when Tr((v - w) zeta^s) vanishes for s = 0..phi(e)-1; the
    trace form is nondegenerate, so this is a complete test and needs
    only integer dot products against shifts of this vector.
    """
    from math import gcd
    from sympy import mobius, totient
    te = int(totient(e))
    out = []
    for m in range(e):
        f = e // gcd(m, e)
        out.append(int(mobius(f)) * te // int(totient(f)))
    return tuple(out)


@lru_cache(maxsize=None)
def trace_matrix(e: int):
    """Rows s = 0..phi(e)-1 of tr[(j+s) mod e], as int64; second return
    value is the largest absolute entry for overflow budgeting."""
    tr = trace_vector(e)
    deg = len(phi_coeffs(e)) - 1
    m = np.empty((deg, e), dtype=np.int64)
    for s in range(deg):
        for j in range(e):
            m[s, j] = tr[(j + s) % e]
    return m, max(1, max(abs(t) for t in tr))


def represents_integer(vec, e: int, w: int) -> bool:
    """Exact test that a length-e integer vector equals w in Z[zeta_e]."""
    t, bound = trace_matrix(e)
    tr = trace_vector(e)
    a = np.asarray(vec, dtype=np.int64)
    mx = int(np.abs(a).max(initial=0))
    if mx and mx * bound * e >= (1 << 62):
        vec = [int(x) for x in vec]
        for s in range(t.shape[0]):
            if sum(v * tr[(j + s) % e] for j, v in enumerate(vec) if v) != w * tr[s]:
                return False
        return True
    got = t @ a
    want = np.array([w * tr[s] for s in range(t.shape[0])], dtype=np.int64)
    return bool(np.array_equal(got, want))
