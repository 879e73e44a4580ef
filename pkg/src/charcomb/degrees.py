"""Exact unipotent character degrees for the classical families.

Linear/unitary degrees are evaluated two independent ways: a beta-set
product formula and the q-analog hook-length formula.  The B/C/D degree
is the printed symbol formula, kept as an exact rational: odd-defect
symbols must come out integral (anything else is a usage error), while
even-defect values are allowed to land in (1/2)Z and are only flagged,
since the printed 2-power denominator is known to overshoot for some of
those and downstream cross-checks adjudicate against real tables.

Every check in this module is an exact integer or rational comparison;
floating point appears only in advisory exponent summaries.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from sympy import factorint

from .arrays import (
    Array, Symbol, bits_of, defect_mm, rank_mm, reduce_mm, unordered_key_mm,
)
from .combinat import beta_of_partition, hook_lengths, n_stat, partitions


@lru_cache(maxsize=None)
def is_prime_power(q: int) -> bool:
    return q >= 2 and len(factorint(q)) == 1


def _check_q(q: int) -> None:
    if not is_prime_power(q):
        raise ValueError(f"q = {q} is not a prime power")


# ---------------------------------------------------------------------------
# types A and 2A


def unip_degree_A(lam, q: int, eps: int = 1) -> int:
    """Degree of the unipotent character of SL_n^eps(q) labelled by the
    partition lam of n, via the beta-set product formula."""
    _check_q(q)
    if eps not in (1, -1):
        raise ValueError("eps must be +1 or -1")
    lam = tuple(lam)
    if any(p <= 0 for p in lam) or any(
            lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError("lam must be a partition with positive parts")
    n = sum(lam)
    beta = beta_of_partition(lam)
    m = len(beta)
    b = eps * q
    num = 1
    for i in range(m):
        for j in range(i):
            num *= b ** beta[i] - b ** beta[j]
    for i in range(1, n + 1):
        num *= b ** i - 1
    den = 1
    for top in beta:
        for j in range(1, top + 1):
            den *= b ** j - 1
    for k in range(2, m):
        den *= q ** comb(k, 2)
    val = Fraction(num, den)
    if val.denominator != 1:
        raise ArithmeticError(f"non-integral type-A degree for {lam}")
    return abs(int(val))


def qhook_degree_A(lam, q: int, eps: int = 1) -> int:
    """Independent route: q-analog of the hook-length formula."""
    _check_q(q)
    lam = tuple(lam)
    n = sum(lam)
    b = eps * q
    num = b ** n_stat(lam)
    for i in range(1, n + 1):
        num *= b ** i - 1
    den = 1
    for row in hook_lengths(lam):
        for h in row:
            den *= b ** h - 1
    val = Fraction(num, den)
    if val.denominator != 1:
        raise ArithmeticError(f"non-integral hook evaluation for {lam}")
    return abs(int(val))


# ---------------------------------------------------------------------------
# types B, C, D


@dataclass(frozen=True)
class DegreeValue:
    value: Fraction
    q: int
    kind: str
    integral: bool

    def as_int(self) -> int:
        if not self.integral:
            raise ArithmeticError(f"degree {self.value} is not integral")
        return int(self.value)


def _masks_of(sym) -> tuple[int, int]:
    if isinstance(sym, Symbol):
        return sym.array.m0, sym.array.m1
    if isinstance(sym, Array):
        return sym.m0, sym.m1
    m0, m1 = sym
    return m0, m1


def order_part_prime_to_p(r: int, defect: int, q: int) -> int:
    """|G|_{p'} of the rank-r classical group carrying symbols of the
    given defect: B/C for odd defect, split/twisted D by defect mod 4."""
    d = abs(defect)
    if d & 1:
        out = 1
        for i in range(1, r + 1):
            out *= q ** (2 * i) - 1
        return out
    out = q ** r - 1 if d % 4 == 0 else q ** r + 1
    for i in range(1, r):
        out *= q ** (2 * i) - 1
    return out


def unip_degree_BCD(sym, q: int) -> DegreeValue:
    """The printed symbol-formula degree, exact, for the reduced
    representative with 0 outside the row intersection."""
    _check_q(q)
    m0, m1 = reduce_mm(*_masks_of(sym))
    lam0 = bits_of(m0)
    lam1 = bits_of(m1)
    n0, n1 = len(lam0), len(lam1)
    n = n0 + n1
    r = rank_mm(m0, m1)
    defect = defect_mm(m0, m1)
    kind = "BC" if defect & 1 else "D" if defect % 4 == 0 else "2D"
    if n == 0:
        return DegreeValue(Fraction(1), q, kind, True)
    num = order_part_prime_to_p(r, defect, q)
    for row in (lam0, lam1):
        for i in range(len(row)):
            for j in range(i):
                num *= q ** row[i] - q ** row[j]
    for a in lam0:
        for b in lam1:
            num *= q ** a + q ** b
    den = 1 << (n // 2)
    for row in (lam0, lam1):
        for top in row:
            for j in range(1, top + 1):
                den *= q ** (2 * j) - 1
    for k in range(1, (n - 2) // 2 + 1):
        den *= q ** comb(n - 2 * k, 2)
    val = Fraction(num, den)
    integral = val.denominator == 1
    if (defect & 1) and not integral:
        raise ArithmeticError(
            f"odd-defect degree came out non-integral: {val}")
    return DegreeValue(val, q, kind, integral)


# ---------------------------------------------------------------------------
# enumeration


def _symbols_of_rank_defect(rank: int, defect: int) -> list[Array]:
    from .weylchars import symbols_of_rank
    return symbols_of_rank(rank, defect)


def enumerate_symbols(rank: int, kind: str) -> list:
    """Complete canonical enumerations: 'A' yields partitions of rank,
    'odd' the unordered odd-defect symbols, 'even' the even-defect ones
    with degenerate symbols emitted twice (sign +-1)."""
    k = kind.lower()
    if k in ("a", "apartitions"):
        return list(partitions(rank))
    if k in ("odd", "odddefect"):
        out = []
        d = 1
        while (d * d - 1) // 4 <= rank:
            out.extend(Symbol(x) for x in _symbols_of_rank_defect(rank, d))
            d += 2
        return out
    if k in ("even", "evendefect"):
        out = []
        seen = set()
        for x in _symbols_of_rank_defect(rank, 0):
            key = unordered_key_mm(x.m0, x.m1)
            if key in seen:
                continue
            seen.add(key)
            canon = Array.from_masks(*key)
            if canon.is_degenerate():
                out.append(Symbol(canon, 1))
                out.append(Symbol(canon, -1))
            else:
                out.append(Symbol(canon))
        d = 2
        while d * d // 4 <= rank:
            out.extend(Symbol(x) for x in _symbols_of_rank_defect(rank, d))
            d += 2
        return out
    raise ValueError(f"unknown enumeration kind {kind!r}")


def degree_of(entry, q: int, kind: str):
    k = kind.lower()
    if k in ("a", "apartitions"):
        return Fraction(unip_degree_A(entry, q))
    return unip_degree_BCD(entry, q).value


def count_degree_at_most(kind: str, rank: int, q: int, bound: int) -> dict:
    """Exact count of enumerated characters of degree <= bound, the
    smallest exponent consistent with count <= bound^{C/rank}, and the
    per-entry lower-bound audits the counting argument leans on."""
    import math
    _check_q(q)
    entries = enumerate_symbols(rank, kind)
    degs = [degree_of(e, q, kind) for e in entries]
    count = sum(1 for d in degs if d <= bound)
    if kind.lower() in ("a", "apartitions"):
        audits_ok = all(audit_degree_chain_A(e, q)["ok"] for e in entries)
    else:
        audits_ok = all(audit_degree_chain_BCD(e, q)["ok"] for e in entries)
    c_prime = None
    if bound >= 2 and count >= 1:
        c_prime = rank * math.log(count) / math.log(bound)
    return {"kind": kind, "rank": rank, "q": q, "bound": bound,
            "total": len(entries), "count": count, "c_prime": c_prime,
            "audits_ok": audits_ok}


# ---------------------------------------------------------------------------
# the merged sequence and the rank identities


def merged_sequence(m0: int, m1: int) -> tuple[int, ...]:
    return tuple(sorted(bits_of(m0) + bits_of(m1)))


def nu_conditions_ok(nu: tuple[int, ...]) -> bool:
    """nu_1 < nu_3 < nu_5 < ... and 0 < nu_2 < nu_4 < ..."""
    odd = nu[0::2]
    even = nu[1::2]
    if any(odd[i] >= odd[i + 1] for i in range(len(odd) - 1)):
        return False
    if even and even[0] <= 0:
        return False
    return not any(even[i] >= even[i + 1] for i in range(len(even) - 1))


def rank_routes(m0: int, m1: int) -> tuple[int, int, int]:
    """The three displayed evaluations of the rank of a reduced symbol."""
    nu = merged_sequence(m0, m1)
    n = len(nu)
    r1 = sum(bits_of(m0)) + sum(bits_of(m1)) - (n - 1) ** 2 // 4
    r2 = sum(nu) - (n - 1) ** 2 // 4
    r3 = sum(v - (k - 1) // 2 for k, v in enumerate(nu, start=1))
    return r1, r2, r3


def audit_symbol_rank_identities(m0: int, m1: int) -> dict:
    """Per-symbol identities: the three rank routes agree, the defect
    correction term closes the beta-rank gap, the merged-sequence
    constraints hold, and r >= floor(n/2)."""
    from .combinat import beta_rank
    m0, m1 = reduce_mm(m0, m1)
    nu = merged_sequence(m0, m1)
    n = len(nu)
    r1, r2, r3 = rank_routes(m0, m1)
    routes_ok = r1 == r2 == r3 == rank_mm(m0, m1)
    d = defect_mm(m0, m1)
    gap = (d * d - 1) // 4 if d & 1 else d * d // 4
    r_beta = beta_rank(bits_of(m0)) + beta_rank(bits_of(m1))
    d12b_ok = r1 == r_beta + gap and r1 >= r_beta
    nu_ok = nu_conditions_ok(nu)
    half_ok = r1 >= n // 2
    return {"routes_ok": routes_ok, "d12b_ok": d12b_ok, "nu_ok": nu_ok,
            "half_ok": half_ok,
            "ok": routes_ok and d12b_ok and nu_ok and half_ok}


# ---------------------------------------------------------------------------
# proof-chain inequalities, audited exactly


def audit_degree_chain_A(lam, q: int) -> dict:
    """The lower-bound chain for a type-A degree, squared where needed so
    every comparison stays in exact integers:
      d * q^{4m} > q^{E},  E = (n^2 - sum mu_i^2)/2,  (d q^{4m})^2 >= q^{n(n - mu_max)}.
    """
    lam = tuple(lam)
    n = sum(lam)
    beta = beta_of_partition(lam)
    m = len(beta)
    mu = [top + 1 - i for i, top in enumerate(beta, start=1)]
    d = unip_degree_A(lam, q)
    e_direct = (sum(beta[i] for i in range(m) for _ in range(i))
                + comb(n + 1, 2)
                - sum(comb(top + 1, 2) for top in beta)
                - sum(comb(k, 2) for k in range(2, m)))
    e_closed2 = n * n - sum(x * x for x in mu)
    ident_ok = 2 * e_direct == e_closed2
    lower_ok = d * q ** (4 * m) > _qpow(q, e_direct)
    mu_max = max(mu)
    final_ok = (d * q ** (4 * m)) ** 2 >= q ** (n * (n - mu_max))
    return {"exponent_identity": ident_ok, "lower_bound": lower_ok,
            "mu_max_bound": final_ok,
            "ok": ident_ok and lower_ok and final_ok}


def floor_square_identity(m: int) -> bool:
    """sum_{i<=2m+1} floor((i-1)/2)^2 - sum_{k<=m} C(2m+1-2k, 2) = m(m+1)/2."""
    n = 2 * m + 1
    lhs = sum(((i - 1) // 2) ** 2 for i in range(1, n + 1))
    lhs -= sum(comb(n - 2 * k, 2) for k in range(1, m + 1))
    return 2 * lhs == m * (m + 1)


def audit_degree_chain_BCD(sym, q: int) -> dict:
    """The displayed odd-n lower-bound chain for a B/C degree, in squared
    exact form, plus Eq. d13a: with M = max_i(nu_i - floor((i-1)/2)),
      d^2 q^{5n} >= q^{2 E0},  d^2 q^{15r} >= q^{2 E0},  d^2 q^{15r} >= q^{2r(r-M)},
    and the intermediate algebraic identities the proof routes through.
    Even-n symbols only get the rank identities (the paper displays the
    chain for the odd case and waves at the rest)."""
    m0, m1 = reduce_mm(*_masks_of(sym))
    nu = merged_sequence(m0, m1)
    n = len(nu)
    r = rank_mm(m0, m1)
    base = audit_symbol_rank_identities(m0, m1)
    if n % 2 == 0 or r == 0:
        return {**base, "chain": None}
    m = (n - 1) // 2
    d = unip_degree_BCD((m0, m1), q).value
    e0 = (r * r + r
          + sum((i - 1) * v for i, v in enumerate(nu, start=1))
          - sum(v * (v + 1) for v in nu)
          - sum(comb(n - 2 * k, 2) for k in range(1, m + 1)))
    a2 = (r * r - m * m
          + sum((i - 1) * v for i, v in enumerate(nu, start=1))
          - sum(v * v for v in nu)
          - sum(comb(n - 2 * k, 2) for k in range(1, m + 1)))
    subst_ok = e0 - a2 == r + m * m - sum(nu)   # both vanish via d12
    ident0_ok = e0 == a2
    y = sum(((i - 1) - 2 * ((i - 1) // 2)) * v for i, v in enumerate(nu, start=1))
    y_ok = y == sum(nu[1::2]) and 2 * y >= m * (m + 1)
    dev = [v - (i - 1) // 2 for i, v in enumerate(nu, start=1)]
    fsq = floor_square_identity(m)
    regroup_ok = a2 == (r * r - m * m + y - sum(t * t for t in dev)
                        + sum(((i - 1) // 2) ** 2 for i in range(1, n + 1))
                        - sum(comb(n - 2 * k, 2) for k in range(1, m + 1)))
    drop_ok = a2 >= r * r - sum(t * t for t in dev) + m
    big_m = max(dev)
    max_ok = a2 >= r * r - r * big_m
    d2 = d * d
    ineq1 = d2 * q ** (5 * n) >= _qpow(q, 2 * e0)
    ineq2 = d2 * q ** (15 * r) >= _qpow(q, 2 * e0)
    d13a = d2 * q ** (15 * r) >= _qpow(q, 2 * r * (r - big_m))
    chain_ok = all((ident0_ok, subst_ok, y_ok, fsq, regroup_ok, drop_ok,
                    max_ok, ineq1, ineq2, d13a))
    return {**base,
            "chain": {"exponent_identity": ident0_ok, "subst": subst_ok,
                      "y": y_ok, "floor_square": fsq, "regroup": regroup_ok,
                      "drop": drop_ok, "max_step": max_ok,
                      "lower_5n": ineq1, "lower_15r": ineq2, "d13a": d13a},
            "ok": base["ok"] and chain_ok}


def _qpow(q: int, e: int):
    return q ** e if e >= 0 else Fraction(1, q ** -e)


# ---------------------------------------------------------------------------
# the two infinite-product bounds, truncated


def product_bounds_ok(q: int, terms: int = 40) -> bool:
    """All truncations of prod(1 - q^-i) stay above 1/4 and of
    prod(1 + q^-i) below 2.4, exactly."""
    lo = Fraction(1)
    hi = Fraction(1)
    quarter = Fraction(1, 4)
    cap = Fraction(24, 10)
    for i in range(1, terms + 1):
        lo *= 1 - Fraction(1, q ** i)
        hi *= 1 + Fraction(1, q ** i)
        if lo <= quarter or hi >= cap:
            return False
    return True
