"""Arrays (ordered pairs of beta-sets) and symbols.

An array X = (top, bottom) is a pair of finite sets of non-negative integers.
Internally each row is a bitmask integer (bit x set iff x is in the row),
which makes the set algebra used everywhere (union, intersection, symmetric
difference, the mod-2 pairing <A,B> = |A & B| mod 2) single integer
operations.  The public face is sorted tuples.

Terminology used across the package:

* rank      rk(X) = sum(top) + sum(bottom) - floor(((|X|-1)/2)^2)
* defect    Def(X) = |top| - |bottom|
* X^union, X^inter, X^sdiff: union/intersection/symmetric difference of rows
* similarity: Y ~ X iff same union and intersection; |Sim(X)| = 2^{|X^sdiff|}
* the special array X_sp: the similarity-class member that distributes
  X^sdiff so the defect lands in {0,1}, smallest sdiff entry in the bottom row
* sharp(X) = bottom(X) symdiff bottom(X_sp), a subset of X^sdiff
* s(X) = 2^{(|X^sdiff| - Def(X_sp))/2},  d(X) = (Def(X) - Def(X_sp))/2
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Iterable, Iterator

from .combinat import beta_rank


# ---------------------------------------------------------------------------
# bitmask helpers (tuple <-> mask)

def mask_of(xs: Iterable[int]) -> int:
    m = 0
    for x in xs:
        if x < 0:
            raise ValueError("array entries must be non-negative")
        b = 1 << x
        if m & b:
            raise ValueError(f"duplicate entry {x} within a row")
        m |= b
    return m


def bits_of(m: int) -> tuple[int, ...]:
    out = []
    x = 0
    while m:
        if m & 1:
            out.append(x)
        m >>= 1
        x += 1
    return tuple(out)


def popcount(m: int) -> int:
    return m.bit_count()


def low_mask(t: int) -> int:
    """Bitmask of {0, ..., t-1}; empty for t <= 0."""
    return (1 << t) - 1 if t > 0 else 0


def pairing_mask(a: int, b: int) -> int:
    """<A,B> = |A intersect B| mod 2 on bitmasks."""
    return (a & b).bit_count() & 1


def msum(m: int) -> int:
    """Sum of the set encoded by mask m."""
    s = 0
    x = 0
    while m:
        if m & 1:
            s += x
        m >>= 1
        x += 1
    return s


# ---------------------------------------------------------------------------
# core numerics on mask pairs (cached; these sit inside every sweep loop)

@lru_cache(maxsize=None)
def rank_mm(m0: int, m1: int) -> int:
    # The correction term floor((size-1)^2 / 4) is the minimal possible
    # entry sum, which keeps the rank invariant under row shifts.
    size = popcount(m0) + popcount(m1)
    r = msum(m0) + msum(m1) - (size - 1) ** 2 // 4 if size else 0
    return r


def defect_mm(m0: int, m1: int) -> int:
    return popcount(m0) - popcount(m1)


def reduce_mm(m0: int, m1: int) -> tuple[int, int]:
    """Strip the common {0..k-1} prefix from both rows and translate down."""
    while m0 & m1 & 1:
        m0 >>= 1
        m1 >>= 1
    return m0, m1


def shift_mm(m0: int, m1: int, k: int) -> tuple[int, int]:
    lo = low_mask(k)
    return (m0 << k) | lo, (m1 << k) | lo


@lru_cache(maxsize=None)
def special_mm(m0: int, m1: int) -> tuple[int, int]:
    """The special member of the similarity class of (m0, m1).

    Entries of X^sdiff are placed alternately, counted from the top of the
    sorted list downwards, so that the smallest entry lands in the bottom row
    and the defect of the result is |X^sdiff| mod 2 (0 or 1).
    """
    inter = m0 & m1
    sd = m0 ^ m1
    n_sd = popcount(sd)
    sp0, sp1 = inter, inter
    i = 0
    m = sd
    x = 0
    while m:
        if m & 1:
            i += 1
            # i-th smallest element of sdiff (1-based): row index
            # (n_sd + i) mod 2 == 1 means bottom row.
            if (n_sd + i) & 1:
                sp1 |= 1 << x
            else:
                sp0 |= 1 << x
        m >>= 1
        x += 1
    return sp0, sp1


@lru_cache(maxsize=None)
def sharp_mm(m0: int, m1: int) -> int:
    _, sp1 = special_mm(m0, m1)
    return m1 ^ sp1


def s_exponent_mm(m0: int, m1: int) -> int:
    """log2 of s(X): (|X^sdiff| - Def(X_sp)) / 2 = floor(|X^sdiff| / 2)."""
    return popcount(m0 ^ m1) // 2


def d_of_mm(m0: int, m1: int) -> int:
    sd_parity = popcount(m0 ^ m1) & 1  # = Def(X_sp)
    d2 = defect_mm(m0, m1) - sd_parity
    assert d2 % 2 == 0
    return d2 // 2


def sim_members_mm(m0: int, m1: int) -> list[tuple[int, int]]:
    """All arrays similar to (m0, m1): distribute X^sdiff over the rows."""
    inter = m0 & m1
    sd = bits_of(m0 ^ m1)
    out = []
    for pick in range(1 << len(sd)):
        b0 = inter
        b1 = inter
        for i, x in enumerate(sd):
            if (pick >> i) & 1:
                b1 |= 1 << x
            else:
                b0 |= 1 << x
        out.append((b0, b1))
    return out


# ---------------------------------------------------------------------------
# public Array / Symbol types

class Array:
    """Immutable ordered pair of beta-set rows."""

    __slots__ = ("m0", "m1", "_hash")

    def __init__(self, top: Iterable[int] = (), bottom: Iterable[int] = ()):
        object.__setattr__(self, "m0", mask_of(top))
        object.__setattr__(self, "m1", mask_of(bottom))
        object.__setattr__(self, "_hash", hash((self.m0, self.m1)))

    @classmethod
    def from_masks(cls, m0: int, m1: int) -> "Array":
        a = object.__new__(cls)
        object.__setattr__(a, "m0", m0)
        object.__setattr__(a, "m1", m1)
        object.__setattr__(a, "_hash", hash((m0, m1)))
        return a

    def __setattr__(self, *_):
        raise AttributeError("Array is immutable")

    @property
    def top(self) -> tuple[int, ...]:
        return bits_of(self.m0)

    @property
    def bottom(self) -> tuple[int, ...]:
        return bits_of(self.m1)

    def row(self, j: int) -> int:
        """Bitmask of row j (0 = top, 1 = bottom)."""
        return self.m1 if j & 1 else self.m0

    @property
    def size(self) -> int:
        return popcount(self.m0) + popcount(self.m1)

    def rank(self) -> int:
        r = rank_mm(self.m0, self.m1)
        # Second evaluation route: rho(top) + rho(bottom) + defect term.
        d = self.defect()
        alt = (
            beta_rank(self.top) + beta_rank(self.bottom)
            + ((d * d - 1) // 4 if d % 2 else (d * d) // 4)
        )
        if r != alt:
            raise ArithmeticError(
                f"rank routes disagree on {self}: {r} vs {alt}")
        return r

    def defect(self) -> int:
        return defect_mm(self.m0, self.m1)

    def union_mask(self) -> int:
        return self.m0 | self.m1

    def inter_mask(self) -> int:
        return self.m0 & self.m1

    def sdiff_mask(self) -> int:
        return self.m0 ^ self.m1

    def is_reduced(self) -> bool:
        return not (self.m0 & self.m1 & 1)

    def reduce(self) -> "Array":
        return Array.from_masks(*reduce_mm(self.m0, self.m1))

    def shift(self, k: int) -> "Array":
        return Array.from_masks(*shift_mm(self.m0, self.m1, k))

    def opposite(self) -> "Array":
        return Array.from_masks(self.m1, self.m0)

    def is_degenerate(self) -> bool:
        return self.m0 == self.m1

    def __eq__(self, other) -> bool:
        return (isinstance(other, Array)
                and self.m0 == other.m0 and self.m1 == other.m1)

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Array") -> bool:
        return self.sort_key() < other.sort_key()

    def sort_key(self):
        return (self.top, self.bottom)

    def __repr__(self) -> str:
        return f"Array({self.top}, {self.bottom})"

    def __str__(self) -> str:
        t = ",".join(str(x) for x in self.top)
        b = ",".join(str(x) for x in self.bottom)
        return "{" + t + "|" + b + "}"


def parse_array(text: str) -> Array:
    """Parse "{a,b,...|c,d,...}" notation; duplicates within a row rejected."""
    s = text.strip()
    if not (s.startswith("{") and s.endswith("}")):
        raise ValueError(f"array literal must be braced: {text!r}")
    body = s[1:-1]
    if body.count("|") != 1:
        raise ValueError(f"array literal needs exactly one '|': {text!r}")
    top_s, bot_s = body.split("|")

    def parse_row(row: str) -> list[int]:
        row = row.strip()
        if not row:
            return []
        try:
            return [int(p) for p in row.split(",")]
        except ValueError:
            raise ValueError(f"bad row in array literal: {row!r}") from None

    return Array(parse_row(top_s), parse_row(bot_s))


def array_rank(x: Array) -> int:
    return x.rank()


def array_defect(x: Array) -> int:
    return x.defect()


def similarity_class(x: Array) -> list[Array]:
    """All Y with the same union and intersection as X, sorted."""
    members = [Array.from_masks(a, b) for a, b in sim_members_mm(x.m0, x.m1)]
    members.sort(key=Array.sort_key)
    return members


def special_array(x: Array) -> Array:
    return Array.from_masks(*special_mm(x.m0, x.m1))


def sharp(x: Array) -> tuple[int, ...]:
    """bottom(X) symdiff bottom(X_sp), as a sorted tuple."""
    return bits_of(sharp_mm(x.m0, x.m1))


def s_of(x: Array) -> int:
    return 1 << s_exponent_mm(x.m0, x.m1)


def d_of(x: Array) -> int:
    return d_of_mm(x.m0, x.m1)


class Symbol:
    """Unordered symbol: the {X, X^op} pair of a reduced array.

    The canonical representative is the reduced array whose (top, bottom)
    sequence pair is lexicographically minimal among the two orientations.
    Degenerate symbols (top = bottom) carry an optional sign tag, used where
    a degenerate class splits in two.
    """

    __slots__ = ("array", "sign")

    def __init__(self, x: Array, sign: int | None = None):
        r = x.reduce()
        o = r.opposite()
        canon = r if r.sort_key() <= o.sort_key() else o
        object.__setattr__(self, "array", canon)
        if canon.is_degenerate():
            if sign not in (1, -1):
                raise ValueError("degenerate symbol requires a sign tag +-1")
        elif sign is not None:
            raise ValueError("sign tag only allowed for degenerate symbols")
        object.__setattr__(self, "sign", sign)

    def __setattr__(self, *_):
        raise AttributeError("Symbol is immutable")

    def rank(self) -> int:
        return self.array.rank()

    def defect(self) -> int:
        return abs(self.array.defect())

    def is_degenerate(self) -> bool:
        return self.array.is_degenerate()

    def __eq__(self, other) -> bool:
        return (isinstance(other, Symbol) and self.array == other.array
                and self.sign == other.sign)

    def __hash__(self) -> int:
        return hash((self.array, self.sign))

    def sort_key(self):
        return (*self.array.sort_key(), 0 if self.sign is None else self.sign)

    def __repr__(self) -> str:
        tag = "" if self.sign is None else ("+" if self.sign > 0 else "-")
        return f"Symbol({self.array}{tag})"

    def __str__(self) -> str:
        tag = "" if self.sign is None else ("+" if self.sign > 0 else "-")
        return str(self.array) + tag


@lru_cache(maxsize=None)
def unordered_key_mm(m0: int, m1: int) -> tuple[int, int]:
    """Canonical mask pair of the unordered symbol of (m0, m1)."""
    m0, m1 = reduce_mm(m0, m1)
    if bits_of(m0) <= bits_of(m1):
        return m0, m1
    return m1, m0


def unordered_key(x: Array) -> tuple[int, int]:
    """Mask-pair key of the canonical orientation of the reduced form of x."""
    return unordered_key_mm(x.m0, x.m1)


def arrays_with(max_entry: int, max_union: int | None = None,
                max_rank: int | None = None) -> Iterator[Array]:
    """Every array with entries <= max_entry, optionally capped by the size
    of the union of rows and/or by rank.  Deterministic order."""
    universe = list(range(max_entry + 1))
    n = len(universe)
    for um in range(1 << n):
        if max_union is not None and popcount(um) > max_union:
            continue
        # choose the intersection inside the union, then split the rest
        sub = um
        while True:
            inter = sub
            rest = bits_of(um & ~inter)
            for pick in range(1 << len(rest)):
                m0, m1 = inter, inter
                for i, x in enumerate(rest):
                    if (pick >> i) & 1:
                        m1 |= 1 << x
                    else:
                        m0 |= 1 << x
                if max_rank is not None and rank_mm(m0, m1) > max_rank:
                    continue
                yield Array.from_masks(m0, m1)
            if sub == 0:
                break
            sub = (sub - 1) & um


def count_arrays(max_entry: int, max_union: int | None = None,
                 max_rank: int | None = None) -> int:
    return sum(1 for _ in arrays_with(max_entry, max_union, max_rank))
