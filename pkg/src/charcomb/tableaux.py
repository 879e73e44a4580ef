"""Kostka numbers and inverse-Kostka rows.

K[shape][content] counts semistandard Young tableaux; the permutation
character on flags of content mu decomposes through these, so the rows
of the inverse matrix are the bridge from flag counting back to a
single unipotent character.  Everything here is small-partition exact
arithmetic; the only cleverness is peeling one letter at a time as a
horizontal strip.
"""

from __future__ import annotations

from functools import lru_cache

from .combinat import dominates, partitions


def _is_partition(lam) -> bool:
    return all(a > 0 for a in lam) and all(
        lam[i] >= lam[i + 1] for i in range(len(lam) - 1))


def horizontal_strips(lam: tuple[int, ...], size: int):
    """Inner shapes nu <= lam with lam/nu a horizontal strip of the
    given size: rowwise nu_i <= lam_i and nu_i >= lam_{i+1}."""
    lam = tuple(lam)
    rows = len(lam)

    def rec(i, left):
        if i == rows:
            if left == 0:
                yield ()
            return
        hi = min(lam[i], lam[i - 1] if i else 10 ** 9)
        lo = lam[i + 1] if i + 1 < rows else 0
        # nu_i ranges over [lo, hi] but can shed at most `left` cells here
        for v in range(max(lo, lam[i] - left), hi + 1):
            for rest in rec(i + 1, left - (lam[i] - v)):
                yield (v,) + rest

    for nu in rec(0, size):
        yield tuple(x for x in nu if x > 0)


@lru_cache(maxsize=None)
def _kostka_sorted(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    if not mu:
        return 1 if not lam else 0
    if not dominates(lam, mu):
        return 0
    if lam == mu:
        return 1
    last = mu[-1]
    rest = mu[:-1]
    return sum(_kostka_sorted(nu, rest) for nu in horizontal_strips(lam, last))


def kostka(lam, mu) -> int:
    """Number of semistandard Young tableaux of shape lam and weight mu.
    The weight may be any composition; the count only sees its multiset."""
    lam = tuple(lam)
    mu = tuple(sorted((x for x in mu if x > 0), reverse=True))
    if not _is_partition(lam):
        raise ValueError(f"{lam} is not a partition")
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: |{lam}| != |{mu}|")
    return _kostka_sorted(lam, mu)


def _attach_head(tail: tuple[int, ...], total: int) -> tuple[int, ...]:
    head = total - sum(tail)
    if tail and head < tail[0]:
        raise ValueError(f"head {head} smaller than tail {tail}")
    if head <= 0:
        raise ValueError(f"total {total} too small for tail {tail}")
    return (head,) + tuple(tail)


def kostka_stable(lam_tail, mu_tail, total: int) -> int:
    """Kostka number of the partitions obtained by topping the two tails
    up to the given total.  In the stable range (head of mu at least
    half the total) the value does not depend on the total, and this is
    checked on the spot by recomputing one size up."""
    lam_tail = tuple(lam_tail)
    mu_tail = tuple(mu_tail)
    lam = _attach_head(lam_tail, total)
    mu = _attach_head(mu_tail, total)
    if 2 * mu[0] < total:
        raise ValueError(f"head {mu[0]} below the stable range for {total}")
    value = kostka(lam, mu)
    again = kostka(_attach_head(lam_tail, total + 1),
                   _attach_head(mu_tail, total + 1))
    if value != again:
        raise ArithmeticError(
            f"stability failed for tails {lam_tail}/{mu_tail}: "
            f"{value} at {total} vs {again} at {total + 1}")
    return value


def dominance_block(lam: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Partitions of |lam| dominating lam, lex increasing (a linear
    extension of dominance)."""
    lam = tuple(lam)
    n = sum(lam)
    return sorted(mu for mu in partitions(n) if dominates(mu, lam))


def inverse_kostka_row(lam, level_cap: int | None = None) -> dict:
    """Coefficients c[mu] with chi_lam = sum_mu c[mu] phi_mu, mu running
    over partitions dominating lam.  Solved by back-substitution against
    the unitriangular Kostka block; the block of partitions with first
    part >= lam_1 is dominance-upward closed, so inverting the block and
    restricting the full inverse agree."""
    lam = tuple(lam)
    if not _is_partition(lam):
        raise ValueError(f"{lam} is not a partition")
    if level_cap is not None and sum(lam) - lam[0] > level_cap:
        raise ValueError(
            f"level {sum(lam) - lam[0]} exceeds the cap {level_cap}")
    block = dominance_block(lam)
    coeff: dict[tuple[int, ...], int] = {}
    for nu in block:
        if nu == lam:
            coeff[nu] = 1
            continue
        s = sum(c * kostka(nu, mu) for mu, c in coeff.items())
        coeff[nu] = -s
    return coeff
