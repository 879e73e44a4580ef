"""Beta-sets and partitions.

A beta-set is a strictly increasing tuple of non-negative integers.  The rank
of a beta-set A is sum(A) - C(|A|, 2); shifting by k prepends {0..k-1} and
translates everything up by k, which preserves the rank.  Reduced beta-sets
(0 absent, or empty) are in bijection with partitions via lambda_i = a_i+1-i
when the entries are written in increasing order.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Iterable, Iterator


def _as_beta(a: Iterable[int]) -> tuple[int, ...]:
    t = tuple(sorted(a))
    if any(x < 0 for x in t):
        raise ValueError(f"beta-set entries must be non-negative: {t}")
    if len(set(t)) != len(t):
        raise ValueError(f"beta-set entries must be distinct: {t}")
    return t


def beta_rank(a: Iterable[int]) -> int:
    """Rank of a beta-set: sum(a) - C(|a|, 2). Shift-invariant."""
    t = _as_beta(a)
    r = sum(t) - comb(len(t), 2)
    assert r >= 0
    return r


def beta_shift(a: Iterable[int], k: int) -> tuple[int, ...]:
    """Prepend {0..k-1} and add k to every entry."""
    if k < 0:
        raise ValueError("shift amount must be non-negative")
    t = _as_beta(a)
    return tuple(range(k)) + tuple(x + k for x in t)


def beta_reduce(a: Iterable[int]) -> tuple[int, ...]:
    """The unique shift-equivalent representative with 0 absent (or empty)."""
    t = _as_beta(a)
    k = 0
    while k < len(t) and t[k] == k:
        k += 1
    return tuple(x - k for x in t[k:])


def beta_of_partition(parts: Iterable[int]) -> tuple[int, ...]:
    """Reduced beta-set of a partition (weakly decreasing positive parts)."""
    p = tuple(parts)
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)) or any(x <= 0 for x in p):
        raise ValueError(f"not a partition: {p}")
    inc = p[::-1]  # lambda_1 <= lambda_2 <= ... matches increasing beta entries
    return tuple(x + i for i, x in enumerate(inc))


def partition_of_beta(a: Iterable[int]) -> tuple[int, ...]:
    """Partition of the reduced form of a beta-set, weakly decreasing."""
    t = beta_reduce(a)
    parts = [x - i for i, x in enumerate(t)]
    return tuple(x for x in reversed(parts) if x > 0)


@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None) -> tuple[tuple[int, ...], ...]:
    """All partitions of n with parts <= max_part, lexicographically decreasing."""
    if n < 0:
        return ()
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_upto(n: int) -> Iterator[tuple[int, ...]]:
    for m in range(n + 1):
        yield from partitions(m)


def dominates(lam: tuple[int, ...], mu: tuple[int, ...]) -> bool:
    """Dominance order on partitions of equal size, by prefix sums."""
    if sum(lam) != sum(mu):
        raise ValueError("dominance is defined for partitions of equal size")
    acc_l = acc_m = 0
    for i in range(max(len(lam), len(mu))):
        acc_l += lam[i] if i < len(lam) else 0
        acc_m += mu[i] if i < len(mu) else 0
        if acc_l < acc_m:
            return False
    return True


def conjugate_partition(lam: tuple[int, ...]) -> tuple[int, ...]:
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > i) for i in range(lam[0]))


def hook_lengths(lam: tuple[int, ...]) -> list[list[int]]:
    """Hook length of each cell of the Young diagram of lam."""
    conj = conjugate_partition(lam)
    return [
        [lam[i] - j + conj[j] - i - 1 for j in range(lam[i])]
        for i in range(len(lam))
    ]


def n_stat(lam: tuple[int, ...]) -> int:
    """n(lambda) = sum (i-1) * lambda_i, rows numbered from 1."""
    return sum(i * x for i, x in enumerate(lam))
