"""Formal sums with exact rational coefficients.

A FormalSum is a finite linear combination of hashable keys (arrays, symbols)
over Fraction.  Zero coefficients are dropped eagerly so equality is plain
dict equality.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Hashable, Iterable, Iterator, Mapping

Coeff = Fraction | int


class FormalSum:
    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Hashable, Coeff] | Iterable = ()):
        d: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for key, c in items:
            c = Fraction(c)
            if c:
                c0 = d.get(key)
                c = c if c0 is None else c0 + c
                if c:
                    d[key] = c
                else:
                    del d[key]
        object.__setattr__(self, "terms", d)

    def __setattr__(self, *_):
        raise AttributeError("FormalSum is immutable")

    @classmethod
    def unit(cls, key: Hashable, coeff: Coeff = 1) -> "FormalSum":
        return cls([(key, coeff)])

    @classmethod
    def zero(cls) -> "FormalSum":
        return cls()

    def __iter__(self) -> Iterator[tuple[Hashable, Fraction]]:
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coeff(self, key: Hashable) -> Fraction:
        return self.terms.get(key, Fraction(0))

    def __add__(self, other: "FormalSum") -> "FormalSum":
        d = dict(self.terms)
        for k, c in other.terms.items():
            v = d.get(k)
            v = c if v is None else v + c
            if v:
                d[k] = v
            else:
                del d[k]
        out = object.__new__(FormalSum)
        object.__setattr__(out, "terms", d)
        return out

    def __sub__(self, other: "FormalSum") -> "FormalSum":
        return self + (-other)

    def __neg__(self) -> "FormalSum":
        out = object.__new__(FormalSum)
        object.__setattr__(out, "terms", {k: -c for k, c in self.terms.items()})
        return out

    def scale(self, c: Coeff) -> "FormalSum":
        c = Fraction(c)
        if not c:
            return FormalSum()
        out = object.__new__(FormalSum)
        object.__setattr__(out, "terms", {k: v * c for k, v in self.terms.items()})
        return out

    __rmul__ = scale
    __mul__ = scale

    def map_keys(self, f: Callable[[Hashable], Hashable]) -> "FormalSum":
        """Push the sum through a key map (linear extension, merging fibers)."""
        return FormalSum((f(k), c) for k, c in self.terms.items())

    def apply(self, f: Callable[[Hashable], "FormalSum"]) -> "FormalSum":
        """Linear extension of a key -> FormalSum map."""
        total: dict = {}
        for k, c in self.terms.items():
            for k2, c2 in f(k).terms.items():
                v = total.get(k2, 0) + c * c2
                if v:
                    total[k2] = v
                else:
                    total.pop(k2, None)
        return FormalSum(total)

    def __eq__(self, other) -> bool:
        return isinstance(other, FormalSum) and self.terms == other.terms

    def __hash__(self):
        raise TypeError("FormalSum is not hashable")

    def sorted_terms(self) -> list[tuple[Hashable, Fraction]]:
        def key_of(item):
            k = item[0]
            sk = getattr(k, "sort_key", None)
            return sk() if callable(sk) else k
        return sorted(self.terms.items(), key=key_of)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for k, c in self.sorted_terms():
            if c == 1:
                bits.append(f"+ {k}")
            elif c == -1:
                bits.append(f"- {k}")
            elif c > 0:
                bits.append(f"+ {c}*{k}")
            else:
                bits.append(f"- {-c}*{k}")
        s = " ".join(bits)
        return s[2:] if s.startswith("+ ") else s
