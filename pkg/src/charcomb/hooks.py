"""Hooks of arrays and the hook removal operators.

A (d,i)-hook of an array X is a point lam = (x, j) of X whose displaced
image D_{d,i}(lam) = (x-d, j+i) still has a non-negative first coordinate and
does not lie in X.  Removing the hook toggles both points:
X minus lam = X symdiff {lam} symdiff {D(lam)}.

The leg parity of a hook lam = (x, j) is

    l_{d,i}(lam, X) = <{0..x}, X^j> + <{0..x-d}, (X minus lam)^{j+i}>  (mod 2)

and the linear operator on formal sums is

    Htilde^jj_{d,i}(X) = sum over hooks lam of
        (-1)^{jj * delta(lam) + l_{d,i}(lam, X)} (X minus lam)

with delta(lam) the row of lam.  d may be negative (hooks get added rather
than removed); d = 0 is only meaningful with i = 1, where the (0,1)-hooks
are exactly the points over X^sdiff and removal walks the similarity class.
"""

from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

from .arrays import Array, low_mask, pairing_mask
from .formal import FormalSum


class HookPosition(NamedTuple):
    entry: int
    row: int  # 0 = top, 1 = bottom


def _check_di(d: int, i: int) -> None:
    if i not in (0, 1):
        raise ValueError(f"row displacement i must be 0 or 1, got {i}")
    if d == 0 and i == 0:
        raise ValueError("(d,i) = (0,0) is not a hook type")


@lru_cache(maxsize=None)
def hooks_mm(m0: int, m1: int, d: int, i: int) -> tuple[tuple[int, int], ...]:
    out = []
    for j, row in ((0, m0), (1, m1)):
        target = (m1 if (i + j) & 1 else m0)
        m = row
        x = 0
        while m:
            if m & 1:
                y = x - d
                if y >= 0 and not ((target >> y) & 1):
                    out.append((x, j))
            m >>= 1
            x += 1
    return tuple(out)


def hooks(x: Array, d: int, i: int) -> list[HookPosition]:
    _check_di(d, i)
    return [HookPosition(*h) for h in hooks_mm(x.m0, x.m1, d, i)]


def remove_hook_mm(m0: int, m1: int, d: int, i: int,
                   entry: int, row: int) -> tuple[int, int]:
    y = entry - d
    if y < 0:
        raise ValueError("displaced point would leave the non-negative grid")
    if row == 0:
        m0 ^= 1 << entry
    else:
        m1 ^= 1 << entry
    if (i + row) & 1:
        m1 ^= 1 << y
    else:
        m0 ^= 1 << y
    return m0, m1


def remove_hook(x: Array, d: int, i: int, h) -> Array:
    """Remove one hook, or a set of hooks removed simultaneously."""
    _check_di(d, i)
    hs = [h] if isinstance(h, tuple) and not isinstance(h[0], tuple) else list(h)
    m0, m1 = x.m0, x.m1
    for entry, row in hs:
        m0, m1 = remove_hook_mm(m0, m1, d, i, entry, row)
    return Array.from_masks(m0, m1)


def leg_parity_mm(m0: int, m1: int, d: int, i: int,
                  entry: int, row: int) -> int:
    r0, r1 = remove_hook_mm(m0, m1, d, i, entry, row)
    src_row = m1 if row else m0
    dst_row = r1 if (i + row) & 1 else r0
    return (pairing_mask(low_mask(entry + 1), src_row)
            ^ pairing_mask(low_mask(entry - d + 1), dst_row))


def leg_parity(x: Array, d: int, i: int, h: HookPosition) -> int:
    _check_di(d, i)
    if tuple(h) not in hooks_mm(x.m0, x.m1, d, i):
        raise ValueError(f"{h} is not a ({d},{i})-hook of {x}")
    return leg_parity_mm(x.m0, x.m1, d, i, h[0], h[1])


@lru_cache(maxsize=None)
def hook_expansion_mm(m0: int, m1: int, d: int, i: int, jj: int) \
        -> tuple[tuple[int, int, int], ...]:
    """Terms (sign, m0', m1') of the operator applied to one array."""
    out = []
    for entry, row in hooks_mm(m0, m1, d, i):
        sign_bit = (jj & row) ^ leg_parity_mm(m0, m1, d, i, entry, row)
        r0, r1 = remove_hook_mm(m0, m1, d, i, entry, row)
        out.append((-1 if sign_bit else 1, r0, r1))
    return tuple(out)


def hook_operator(s: FormalSum, d: int, i: int, j: int) -> FormalSum:
    """The linear hook operator with superscript j applied to a sum of arrays."""
    if d == 0:
        raise ValueError("hook operators require d != 0")
    _check_di(d, i)
    if j not in (0, 1):
        raise ValueError("operator superscript j must be 0 or 1")
    total: dict = {}
    for x, c in s:
        for sign, r0, r1 in hook_expansion_mm(x.m0, x.m1, d, i, j):
            k = Array.from_masks(r0, r1)
            v = total.get(k, 0) + sign * c
            if v:
                total[k] = v
            else:
                del total[k]
    return FormalSum(total)


def abacus_strip_value(beta: tuple[int, ...], parts: tuple[int, ...]) -> int:
    """Classical symmetric-group MN on a beta-set: strip parts in order.

    Returns the signed count, the character value chi_lambda(mu) when beta
    represents lambda and parts is the cycle type mu.  Used as the abacus
    oracle for leg parities and by the symmetric-group character code.
    """
    if not parts:
        return 1
    d, rest = parts[0], parts[1:]
    bset = set(beta)
    total = 0
    for b in beta:
        lo = b - d
        if lo >= 0 and lo not in bset:
            between = sum(1 for c in bset if lo < c < b)
            new = tuple(sorted((bset - {b}) | {lo}))
            total += (-1) ** between * abacus_strip_value(new, rest)
    return total
