"""The thirteen acceptance checks, runnable as a suite.

Each criterion function returns a dict with at least "criterion", "ok",
and "elapsed" seconds; run_all executes them in order.  Expensive shared
artifacts (the operator sweep, groups and their tables) are cached per
process.  Caps, when given, shrink the ranges; they never change what is
asserted about the values that are still in range.
"""

from __future__ import annotations

import time
from fractions import Fraction
from functools import lru_cache

from . import asai as asai_mod
from .arrays import defect_mm
from .classalg import (borel_constituent_degrees, cancel_verify,
                       convolution_counts, frobenius_matches_convolution,
                       thompson_coverage)
from .combinat import dominates, partitions
from .degrees import (audit_degree_chain_A, audit_degree_chain_BCD,
                      audit_symbol_rank_identities, enumerate_symbols,
                      product_bounds_ok, qhook_degree_A, unip_degree_A,
                      unip_degree_BCD)
from .dixon import character_table, verify_table
from .flags import (brute_flag_count, flag_bounds_ok, flag_count,
                    flag_count_product, flag_ratio_ok, stable_count_report,
                    level_char_value)
from .groups import build_group, coxeter_torus_generator
from .tableaux import dominance_block, kostka, kostka_stable
from .weylchars import (audit_centralizers, audit_phi_bound, audit_rho_bound,
                        audit_type_d_bound, check_first_orthogonality,
                        check_second_orthogonality, induced_char_table,
                        phi_routes_agree, rho_table)

MANDATORY_GROUPS = (
    ("SL", 2, 2), ("SL", 2, 3), ("SL", 2, 4), ("SL", 2, 5), ("SL", 2, 7),
    ("SL", 2, 8), ("SL", 2, 9),
    ("SL", 3, 2), ("SL", 3, 3),
    ("GL", 3, 2), ("GL", 3, 3), ("GL", 3, 4),
    ("Sp", 4, 2), ("Sp", 4, 3),
)

_sweep_cache: dict = {}


def _sweep(threads: int, caps: dict):
    key = (threads, caps.get("max_entry", 6), caps.get("max_union", 5),
           caps.get("d_max", 6))
    if key not in _sweep_cache:
        _sweep_cache.clear()
        _sweep_cache[key] = asai_mod.asai_verify(
            max_entry=key[1], max_union=key[2], d_max=key[3],
            include_lemmas=True, threads=threads)
    return _sweep_cache[key]


@lru_cache(maxsize=None)
def _group(family: str, n: int, q: int):
    return build_group(family, n, q)


@lru_cache(maxsize=None)
def _table(family: str, n: int, q: int):
    return character_table(_group(family, n, q))


def _result(num: int, ok: bool, t0: float, **payload) -> dict:
    out = {"criterion": num, "ok": bool(ok),
           "elapsed": round(time.perf_counter() - t0, 3)}
    out.update(payload)
    return out


def criterion_1(threads: int = 1, caps: dict | None = None) -> dict:
    """Hook/Fourier exchange identities, exhaustively, plus refutation of
    the flipped-sign variant."""
    caps = caps or {}
    t0 = time.perf_counter()
    rep = _sweep(threads, caps)
    fails = [f for f in rep["failures"]
             if f["identity"] in ("asai_i", "asai_ii")]
    ok = not fails and rep["counts"]["flipped_refuted"] >= 1
    return _result(1, ok, t0, checked=rep["checked"],
                   counts={k: rep["counts"][k] for k in
                           ("asai_i", "asai_ii", "flipped_refuted")},
                   failures=fails[:5], witness=rep["witness"])


def criterion_2(threads: int = 1, caps: dict | None = None) -> dict:
    """Operator lemmas on the same sweep range."""
    caps = caps or {}
    t0 = time.perf_counter()
    rep = _sweep(threads, caps)
    fails = [f for f in rep["failures"]
             if f["identity"] not in ("asai_i", "asai_ii")]
    names = ("fourier_op", "re_op", "hook_inclusion", "n_hooks")
    ok = not fails and all(rep["counts"][k] > 0 for k in names)
    return _result(2, ok, t0,
                   counts={k: rep["counts"][k] for k in names},
                   failures=fails[:5])


def criterion_3(threads: int = 1, caps: dict | None = None) -> dict:
    """Character tables from the cut rule: both orthogonality relations
    up to rank 6, and agreement with induced characters up to rank 3."""
    caps = caps or {}
    n_max = caps.get("mn_rank", 6)
    t0 = time.perf_counter()
    ok = True
    detail = []
    for n in range(1, n_max + 1):
        _syms, classes, values = rho_table(n)
        first = check_first_orthogonality(values, classes, n)
        second = check_second_orthogonality(values, classes)
        ok = ok and first and second
        detail.append({"n": n, "first": first, "second": second})
    induced_ok = True
    for n in range(1, min(3, n_max) + 1):
        _syms, classes, values = rho_table(n)
        iclasses, rows = induced_char_table(n)
        same = iclasses == classes and \
            sorted(map(tuple, rows)) == sorted(map(tuple, values))
        induced_ok = induced_ok and same
    return _result(3, ok and induced_ok, t0, tables=detail,
                   induced_match=induced_ok)


def criterion_4(threads: int = 1, caps: dict | None = None) -> dict:
    """Definition route and hook-recursion route of phi agree on every
    array and class."""
    caps = caps or {}
    n_max = caps.get("phi_rank", 6)
    t0 = time.perf_counter()
    bad = []
    for n in range(1, n_max + 1):
        bad.extend(phi_routes_agree(n))
    return _result(4, not bad, t0, rank_max=n_max, counterexamples=bad[:5])


def criterion_5(threads: int = 1, caps: dict | None = None) -> dict:
    """Character bounds and centralizer-order bounds."""
    caps = caps or {}
    n_max = caps.get("bound_rank", 6)
    t0 = time.perf_counter()
    worst_rho = max((audit_rho_bound(n)["max_ratio"]
                     for n in range(1, n_max + 1)), default=Fraction(0))
    worst_phi = max((audit_phi_bound(n)["max_ratio"]
                     for n in range(1, n_max + 1)), default=Fraction(0))
    d_ok = all(audit_type_d_bound(n)["ok"]
               for n in range(1, caps.get("type_d_rank", 4) + 1))
    cent = audit_centralizers(caps.get("icycle_rank", 5),
                              caps.get("sym_rank", 8))
    ok = worst_rho <= 1 and worst_phi <= 1 and d_ok and cent["ok"]
    return _result(5, ok, t0, max_rho_ratio=str(worst_rho),
                   max_phi_ratio=str(worst_phi), type_d_ok=d_ok,
                   centralizers=cent)


def criterion_6(threads: int = 1, caps: dict | None = None) -> dict:
    """Degree formulas: the two type-A routes agree; the rank-2 odd
    multiset matches the Borel constituents of the rank-2 symplectic
    tables; enumeration counts; the degree-exponent identities and the
    proof chain inequalities for every symbol in range."""
    caps = caps or {}
    t0 = time.perf_counter()
    n_max = caps.get("degree_n", 8)
    q_list = tuple(caps.get("degree_q", (2, 3, 4, 5)))
    a_ok = all(
        unip_degree_A(lam, q, eps) == qhook_degree_A(lam, q, eps)
        for n in range(1, n_max + 1) for lam in partitions(n)
        for q in q_list for eps in (1, -1))

    borel_ok = True
    borel_detail = {}
    for q in (2, 3):
        syms = enumerate_symbols(2, "oddDefect")
        deg1, deg3 = [], []
        for s in syms:
            d = unip_degree_BCD(s, q).as_int()
            if abs(defect_mm(s.array.m0, s.array.m1)) == 1:
                deg1.append(d)
            else:
                deg3.append(d)
        g = _group("Sp", 4, q)
        tab = _table("Sp", 4, q)
        cons = sorted(borel_constituent_degrees(g, tab))
        same = sorted(deg1) == cons and \
            all(d in tab.degrees for d in deg3)
        borel_detail[q] = {"defect1": sorted(deg1), "constituents": cons,
                           "defect3": deg3, "ok": same}
        borel_ok = borel_ok and same

    count_ok = all(
        len(enumerate_symbols(n, "A")) == len(partitions(n))
        for n in range(0, caps.get("count_n", 10) + 1)) and \
        len(enumerate_symbols(2, "oddDefect")) == 6

    chain_q = tuple(caps.get("chain_q", (2, 3)))
    chain_ok = True
    for rank in range(0, caps.get("chain_rank", 6) + 1):
        for kind in ("oddDefect", "evenDefect"):
            for s in enumerate_symbols(rank, kind):
                m0, m1 = s.array.m0, s.array.m1
                rid = audit_symbol_rank_identities(m0, m1)
                if not rid["ok"]:
                    chain_ok = False
                for q in chain_q:
                    ch = audit_degree_chain_BCD(s, q)
                    if not ch["ok"]:
                        chain_ok = False
    for n in range(1, n_max + 1):
        for lam in partitions(n):
            for q in q_list:
                if not audit_degree_chain_A(lam, q)["ok"]:
                    chain_ok = False
    prod_ok = all(product_bounds_ok(q) for q in q_list)

    ok = a_ok and borel_ok and count_ok and chain_ok and prod_ok
    return _result(6, ok, t0, a_routes=a_ok, borel=borel_detail,
                   counts_ok=count_ok, chains_ok=chain_ok,
                   product_bounds=prod_ok)


def criterion_7(threads: int = 1, caps: dict | None = None) -> dict:
    """Kostka unitriangularity and tail stability; flag counts against
    brute enumeration and the closed product, bounds and ratio law."""
    caps = caps or {}
    t0 = time.perf_counter()
    uni_ok = True
    for n in range(1, caps.get("kostka_n", 8) + 1):
        for lam in partitions(n):
            for mu in partitions(n):
                k = kostka(lam, mu)
                if lam == mu and k != 1:
                    uni_ok = False
                if k and not dominates(lam, mu):
                    uni_ok = False

    stab_ok = True
    tail_max = caps.get("tail_max", 4)
    n_stab = caps.get("stable_total", 12)
    tails = [lam for s in range(0, tail_max + 1) for lam in partitions(s)]
    for lt in tails:
        for mt in tails:
            for total in range(2 * tail_max, n_stab + 1):
                try:
                    kostka_stable(lt, mt, total)
                except ArithmeticError:
                    stab_ok = False

    brute_ok = all(
        brute_flag_count(a, n, 2) == flag_count(a, n, 2)
        for n in range(1, caps.get("brute_n", 6) + 1)
        for a in ((1,), (2,), (1, 2)) if a[-1] <= n)

    n_flag = caps.get("flag_n", 50)
    closed_ok = True
    for q in (2, 3, 4, 5):
        for last in range(1, 5):
            for bits in range(1 << (last - 1)):
                a = tuple(j for j in range(1, last)
                          if bits >> (j - 1) & 1) + (last,)
                for n in range(last, n_flag + 1):
                    if flag_count_product(a, n, q) != flag_count(a, n, q) \
                            or not flag_bounds_ok(a, n, q) \
                            or not flag_ratio_ok(a, n, q):
                        closed_ok = False
    ok = uni_ok and stab_ok and brute_ok and closed_ok
    return _result(7, ok, t0, unitriangular=uni_ok, tails_stable=stab_ok,
                   brute_match=brute_ok, closed_forms=closed_ok)


def criterion_8(threads: int = 1, caps: dict | None = None) -> dict:
    """Stable flag counts at N = 40: relative deviation below 2^-20."""
    caps = caps or {}
    n = caps.get("stable_N", 40)
    t0 = time.perf_counter()
    detail = []
    ok = True
    for m in (1, 2):
        rep = stable_count_report([("1", n - m), ("c", m)], (1, 2), 2)
        good = abs(rep["epsilon"]) < Fraction(1, 2 ** 20)
        ok = ok and good
        detail.append({"m": m, "count": rep["count"],
                       "epsilon": str(rep["epsilon"]), "ok": good})
    return _result(8, ok, t0, N=n, reports=detail)


def criterion_9(threads: int = 1, caps: dict | None = None) -> dict:
    """Character values on split semisimple elements at N = 40 through
    the flag pipeline: the normalized ratio sits within 2^-13 of 1, and
    the degree matches the closed product exactly."""
    caps = caps or {}
    n = caps.get("lowa_N", 40)
    t0 = time.perf_counter()
    ok = True
    detail = []
    shapes = [(n,)] + [(n - sum(t),) + t for t in
                       [lam for lv in (1, 2) for lam in partitions(lv)]]
    for lam in shapes:
        level = sum(lam) - lam[0]
        deg = level_char_value(lam, [("1", n)], 2)
        deg_ok = deg == unip_degree_A(lam, 2)
        for m in (1, 2):
            val = level_char_value(lam, [("1", n - m), ("c", m)], 2)
            ratio = Fraction(2 ** (m * level) * val, deg)
            good = abs(ratio - 1) < Fraction(1, 2 ** 13)
            ok = ok and good and deg_ok
            detail.append({"lam": lam, "m": m, "degree_exact": deg_ok,
                           "deviation": str(abs(ratio - 1)), "ok": good})
    return _result(9, ok, t0, N=n, cases=detail)


def criterion_10(threads: int = 1, caps: dict | None = None) -> dict:
    """Every mandatory character table: exact orthogonality, degree
    square sum, degree divides order."""
    caps = caps or {}
    groups = caps.get("groups", MANDATORY_GROUPS)
    t0 = time.perf_counter()
    ok = True
    detail = []
    for family, n, q in groups:
        tab = _table(family, n, q)
        rep = verify_table(tab)
        ok = ok and rep["ok"]
        detail.append({"group": f"{family}{n}({q})",
                       "classes": tab.n_classes, **rep})
    return _result(10, ok, t0, tables=detail)


def criterion_11(threads: int = 1, caps: dict | None = None) -> dict:
    """Class-product counts from the table equal exhaustive convolution
    for every triple."""
    caps = caps or {}
    groups = caps.get("frobenius_groups",
                      (("SL", 2, 3), ("SL", 2, 5), ("SL", 2, 7),
                       ("GL", 3, 2)))
    t0 = time.perf_counter()
    ok = True
    detail = []
    for family, n, q in groups:
        g = _group(family, n, q)
        good = frobenius_matches_convolution(g, _table(family, n, q))
        ok = ok and good
        detail.append({"group": f"{family}{n}({q})", "ok": good})
    return _result(11, ok, t0, groups=detail)


def criterion_12(threads: int = 1, caps: dict | None = None) -> dict:
    """The cuspidal cancellation sum for (3,2), (3,3), (3,4), every
    central element; the (3,2) instance equals -9."""
    caps = caps or {}
    pairs = caps.get("cancel_pairs", ((3, 2), (3, 3), (3, 4)))
    t0 = time.perf_counter()
    ok = True
    detail = []
    for p, q in pairs:
        rep = cancel_verify(p, q)
        good = rep["ok"]
        if (p, q) == (3, 2):
            good = good and rep["values"] == [-9]
        ok = ok and good
        detail.append({"p": p, "q": q, "values": rep["values"],
                       "expected": rep["expected"], "ok": good})
    return _result(12, ok, t0, instances=detail)


def criterion_13(threads: int = 1, caps: dict | None = None) -> dict:
    """Coverage of the conjugacy classes by products of two Coxeter-torus
    elements, reported as computed and cross-validated by convolution."""
    caps = caps or {}
    t0 = time.perf_counter()
    ok = True
    detail = []
    for q in caps.get("thompson_q", (2, 3)):
        g = _group("SL", 3, q)
        tab = _table("SL", 3, q)
        tc = g.class_of_element(g.key_of(coxeter_torus_generator(3, q)))
        cov = thompson_coverage(g, tab, tc)
        cross = True
        if g.size <= 10 ** 4:
            conv = convolution_counts(g, tc, tc)
            cross = cov == [bool(c) for c in conv]
        ok = ok and cross
        detail.append({
            "group": f"SL3({q})", "torus_class": tc,
            "covered": sum(cov), "classes": len(cov),
            "uncovered": [
                {"size": g.class_sizes[k], "order": g.class_orders[k]}
                for k, c in enumerate(cov) if not c],
            "convolution_agrees": cross,
        })
    return _result(13, ok, t0, reports=detail)


CRITERIA = (criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10,
            criterion_11, criterion_12, criterion_13)


def run_all(threads: int = 1, caps: dict | None = None) -> dict:
    t0 = time.perf_counter()
    results = [fn(threads=threads, caps=caps) for fn in CRITERIA]
    return {
        "ok": all(r["ok"] for r in results),
        "elapsed": round(time.perf_counter() - t0, 3),
        "criteria": results,
    }
