"""The hyperoctahedral group as signed permutations.

An element w on {1..n} is stored as the tuple (w(1), ..., w(n)) with values
in {-n..-1, 1..n}; the action extends to negative arguments by w(-a) = -w(a).
Conjugacy classes are signed cycle types: a weakly decreasing tuple of nonzero
integers, one per cycle, carrying the cycle length and the sign (-1)^{delta}
of the cycle.  The reflection subgroup of index two consists of the elements
with an even number of negative images.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator

from .combinat import partitions

SignedPerm = tuple  # images of 1..n


def identity(n: int) -> SignedPerm:
    return tuple(range(1, n + 1))


def apply(w: SignedPerm, a: int) -> int:
    return w[a - 1] if a > 0 else -w[-a - 1]


def mul(u: SignedPerm, v: SignedPerm) -> SignedPerm:
    """Composition u after v."""
    return tuple(apply(u, x) for x in v)


def inv(w: SignedPerm) -> SignedPerm:
    out = [0] * len(w)
    for i, x in enumerate(w):
        if x > 0:
            out[x - 1] = i + 1
        else:
            out[-x - 1] = -(i + 1)
    return tuple(out)


def delta(w: SignedPerm) -> int:
    """The sign-count homomorphism into Z/2."""
    return sum(1 for x in w if x < 0) & 1


def cycle_type(w: SignedPerm) -> tuple[int, ...]:
    """Signed cycle type, sorted weakly decreasing.

    Each orbit of <w, sign flips> contributes one entry: its number of
    positive points, negated when the cycle product of signs is -1.
    """
    n = len(w)
    seen = [False] * (n + 1)
    out = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        length = 0
        neg = 0
        a = start
        while not seen[a]:
            seen[a] = True
            length += 1
            b = w[a - 1]
            if b < 0:
                neg ^= 1
            a = abs(b)
        out.append(-length if neg else length)
    out.sort(reverse=True)
    return tuple(out)


def class_list(n: int) -> list[tuple[int, ...]]:
    """All signed cycle types for rank n, in a fixed deterministic order."""
    out = []
    for a in range(n, -1, -1):
        for pos in partitions(a):
            for neg in partitions(n - a):
                t = sorted(list(pos) + [-m for m in neg], reverse=True)
                out.append(tuple(t))
    return out


def representative(t: tuple[int, ...]) -> SignedPerm:
    """One element with the given signed cycle type."""
    images: list[int] = []
    base = 0
    for c in t:
        m = abs(c)
        for i in range(1, m):
            images.append(base + i + 1)
        images.append(-(base + 1) if c < 0 else base + 1)
        base += m
    return tuple(images)


def centralizer_order(t: tuple[int, ...]) -> int:
    """|C_W(w)| from the signed cycle type: r equal cycles of absolute
    length m contribute r! * (2m)^r."""
    out = 1
    for c in set(t):
        r = t.count(c)
        out *= factorial(r) * (2 * abs(c)) ** r
    return out


def group_order(n: int) -> int:
    return (1 << n) * factorial(n)


def class_size(t: tuple[int, ...]) -> int:
    n = sum(abs(c) for c in t)
    return group_order(n) // centralizer_order(t)


def delta_of_type(t: tuple[int, ...]) -> int:
    return sum(1 for c in t if c < 0) & 1


def pairwise_distinct(t: tuple[int, ...]) -> bool:
    return all(t[i] > t[i + 1] for i in range(len(t) - 1))


def all_elements(n: int) -> Iterator[SignedPerm]:
    for perm in itertools.permutations(range(1, n + 1)):
        for mask in range(1 << n):
            yield tuple(-x if (mask >> i) & 1 else x
                        for i, x in enumerate(perm))


def brute_centralizer_order(w: SignedPerm, elements: Iterable[SignedPerm]) -> int:
    return sum(1 for g in elements if mul(g, w) == mul(w, g))


def brute_classes(n: int) -> dict[tuple[int, ...], list[SignedPerm]]:
    out: dict[tuple[int, ...], list[SignedPerm]] = {}
    for w in all_elements(n):
        out.setdefault(cycle_type(w), []).append(w)
    return out


@lru_cache(maxsize=None)
def type_d_elements(n: int) -> tuple[SignedPerm, ...]:
    """The index-two reflection subgroup: even number of sign flips."""
    return tuple(w for w in all_elements(n) if delta(w) == 0)
