"""Characters of hyperoctahedral groups evaluated through hook removal.

The irreducible characters are indexed by ordered symbols of fixed defect
(0 or 1) and rank n; their values come from a cycle-peeling recursion on
the indexing array.  The class functions phi attached to arbitrary ordered
symbols are computed two independent ways: straight from their definition
as a signed average of irreducibles over a similarity class, and by their
own hook recursion.  Agreement of the two routes is one of the main audits.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .arrays import (
    Array, d_of_mm, defect_mm, mask_of, rank_mm, reduce_mm, s_exponent_mm,
    sharp_mm, sim_members_mm, special_mm,
)
from .combinat import beta_of_partition, beta_shift, partitions
from .hooks import abacus_strip_value, hook_expansion_mm
from .weyl import (
    centralizer_order, class_list, class_size, delta_of_type, group_order,
)


def bipartitions(n: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    out = []
    for a in range(n, -1, -1):
        for lam0 in partitions(a):
            for lam1 in partitions(n - a):
                out.append((lam0, lam1))
    return out


def symbol_masks(lam0: tuple[int, ...], lam1: tuple[int, ...],
                 defect: int = 1) -> tuple[int, int]:
    """Reduced mask pair whose rows carry the two partitions, with the
    requested defect (top size minus bottom size)."""
    b0 = beta_of_partition(lam0)
    b1 = beta_of_partition(lam1)
    s1 = max(len(b1), len(b0) - defect, -defect, 0)
    s0 = s1 + defect
    m0 = mask_of(beta_shift(b0, s0 - len(b0)))
    m1 = mask_of(beta_shift(b1, s1 - len(b1)))
    return reduce_mm(m0, m1)


def _defect_offset(d: int) -> int:
    """Rank contribution of the defect: (d*d - 1) // 4 odd, d*d // 4 even."""
    return (d * d - 1) // 4 if d & 1 else (d * d) // 4


def symbols_of_rank(n: int, defect: int = 1) -> list[Array]:
    """All ordered symbols (reduced arrays) of the given rank and defect,
    sorted; for defect 0 or 1 these index Irr(W_n)."""
    if n < 0:
        raise ValueError("rank must be nonnegative")
    extra = _defect_offset(defect)
    if extra > n:
        return []
    syms = [Array.from_masks(*symbol_masks(l0, l1, defect))
            for l0, l1 in bipartitions(n - extra)]
    syms.sort(key=Array.sort_key)
    return syms


def arrays_of_rank(n: int) -> list[Array]:
    """Reduced arrays of rank n over every possible defect."""
    out = []
    d = 0
    while _defect_offset(d) <= n:
        out.extend(symbols_of_rank(n, d))
        if d > 0:
            out.extend(symbols_of_rank(n, -d))
        d += 1
    out.sort(key=Array.sort_key)
    return out


def sym_char_value(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    """Symmetric-group character chi_lambda at cycle type mu."""
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"sizes differ: {lam} vs {mu}")
    return abacus_strip_value(beta_of_partition(lam), mu)


def sym_centralizer_order(mu: tuple[int, ...]) -> int:
    out = 1
    for m in set(mu):
        r = mu.count(m)
        out *= factorial(r) * m ** r
    return out


# ---------------------------------------------------------------------------
# rho: the irreducible characters


@lru_cache(maxsize=None)
def _rho_mm(m0: int, m1: int, cycles: tuple[int, ...]) -> int:
    if not cycles:
        return 1
    c, rest = cycles[0], cycles[1:]
    d, j = abs(c), (1 if c < 0 else 0)
    total = 0
    for sgn, r0, r1 in hook_expansion_mm(m0, m1, d, 0, j):
        rr0, rr1 = reduce_mm(r0, r1)
        total += sgn * _rho_mm(rr0, rr1, rest)
    return total


def rho_value(x: Array, t: tuple[int, ...]) -> int:
    """Value of the irreducible character indexed by the ordered symbol x
    at the class with signed cycle type t."""
    n = sum(abs(c) for c in t)
    if rank_mm(x.m0, x.m1) != n:
        raise ValueError(f"rank {rank_mm(x.m0, x.m1)} != |type| {n}")
    if defect_mm(x.m0, x.m1) not in (0, 1):
        raise ValueError("ordered symbol must have defect 0 or 1")
    m0, m1 = reduce_mm(x.m0, x.m1)
    return _rho_mm(m0, m1, tuple(t))


def rho_table(n: int, defect: int = 1):
    """(symbols, classes, values) with values[i][k] an exact integer."""
    if defect not in (0, 1):
        raise ValueError("table defect must be 0 or 1")
    syms = symbols_of_rank(n, defect)
    classes = class_list(n)
    values = [[_rho_mm(x.m0, x.m1, t) for t in classes] for x in syms]
    return syms, classes, values


def check_first_orthogonality(values, classes, n: int) -> bool:
    sizes = [class_size(t) for t in classes]
    order = group_order(n)
    r = len(values)
    for i in range(r):
        for i2 in range(i, r):
            s = sum(sz * values[i][k] * values[i2][k]
                    for k, sz in enumerate(sizes))
            if s != (order if i == i2 else 0):
                return False
    return True


def check_second_orthogonality(values, classes) -> bool:
    r = len(classes)
    for k in range(r):
        for k2 in range(k, r):
            s = sum(row[k] * row[k2] for row in values)
            want = centralizer_order(classes[k]) if k == k2 else 0
            if s != want:
                return False
    return True


# ---------------------------------------------------------------------------
# phi: class functions of arbitrary ordered symbols


def _balanced_defect(m0: int, m1: int) -> int:
    """Defect of the special array: |X-sdiff| mod 2."""
    sd = (m0 | m1) & ~(m0 & m1)
    return sd.bit_count() & 1


@lru_cache(maxsize=None)
def _phi_def_mm(m0: int, m1: int, cycles: tuple[int, ...]) -> Fraction:
    """phi by definition: signed average of rho over the balanced members
    of the similarity class."""
    target = _balanced_defect(m0, m1)
    x_sharp = sharp_mm(m0, m1)
    _, sp1 = special_mm(m0, m1)
    total = 0
    for y0, y1 in sim_members_mm(m0, m1):
        if defect_mm(y0, y1) != target:
            continue
        y_sharp = y1 ^ sp1
        sgn = -1 if (x_sharp & y_sharp).bit_count() & 1 else 1
        r0, r1 = reduce_mm(y0, y1)
        total += sgn * _rho_mm(r0, r1, cycles)
    return Fraction(total, 1 << s_exponent_mm(m0, m1))


@lru_cache(maxsize=None)
def _phi_rec_mm(m0: int, m1: int, cycles: tuple[int, ...]) -> Fraction:
    """phi by its own hook recursion, peeling the first stored cycle."""
    if not cycles:
        return _phi_def_mm(m0, m1, ())
    c, rest = cycles[0], cycles[1:]
    d, j = abs(c), (1 if c < 0 else 0)
    total = Fraction(0)
    for sgn, r0, r1 in hook_expansion_mm(m0, m1, d, j, 0):
        rr0, rr1 = reduce_mm(r0, r1)
        total += sgn * _phi_rec_mm(rr0, rr1, rest)
    if j and (1 + defect_mm(m0, m1)) & 1:
        total = -total
    return total


def phi_value(sym, t: tuple[int, ...], route: str = "definition") -> Fraction:
    """phi attached to a symbol, at the class with signed cycle type t.

    Accepts an Array (ordered symbol: defined on every class) or a Symbol
    (unordered: even-defect symbols only live on the coset of the index-two
    subgroup matching d(X) mod 2, other classes are rejected).
    """
    t = tuple(t)
    if isinstance(sym, Array):
        x, unordered = sym, False
    else:
        x, unordered = sym.array, True
    m0, m1 = reduce_mm(x.m0, x.m1)
    n = sum(abs(c) for c in t)
    if rank_mm(m0, m1) != n:
        raise ValueError(f"rank {rank_mm(m0, m1)} != |type| {n}")
    if unordered and defect_mm(m0, m1) % 2 == 0:
        e = d_of_mm(m0, m1) & 1
        if delta_of_type(t) != e:
            raise ValueError(
                f"class {t} lies outside the coset carrying this symbol "
                f"(needs delta = {e})")
    if route == "definition":
        return _phi_def_mm(m0, m1, t)
    if route == "recursion":
        return _phi_rec_mm(m0, m1, t)
    raise ValueError(f"unknown route {route!r}")


def phi_routes_agree(n: int) -> list[dict]:
    """Counterexamples (empty when the hook recursion matches the
    definition) over every rank-n array and every class."""
    bad = []
    classes = class_list(n)
    for x in arrays_of_rank(n):
        for t in classes:
            a = _phi_def_mm(x.m0, x.m1, t)
            b = _phi_rec_mm(x.m0, x.m1, t)
            if a != b:
                bad.append({"array": str(x), "class": t,
                            "definition": str(a), "recursion": str(b)})
    return bad


# ---------------------------------------------------------------------------
# induced-character oracle (small n): the table rebuilt without any hooks

def _perm_group_elements(a: int):
    import itertools
    return [tuple(p) for p in itertools.permutations(range(1, a + 1))]


def _perm_mul(u, v):
    return tuple(u[x - 1] for x in v)


def induced_char_table(n: int):
    """Rows of Ind_{W_a x W_b}^{W_n}(inflate(chi) x sign-twisted inflate(psi))
    over class_list(n), for every (a, b) and every pair of symmetric-group
    irreducibles, computed by the bare induction formula on the full group.

    The symmetric-group tables come from the generic commutative-algebra
    table engine, so nothing here shares code with the hook recursion.
    """
    from .dixon import GroupData, character_table
    from .weyl import all_elements, cycle_type, mul as wmul, inv as winv

    elements = list(all_elements(n))
    classes = class_list(n)
    reps = {t: None for t in classes}
    for w in elements:
        t = cycle_type(w)
        if reps[t] is None:
            reps[t] = w

    sym_tables = {}
    for a in range(n + 1):
        els = _perm_group_elements(a)
        g = GroupData(els, _perm_mul)
        sym_tables[a] = (g, character_table(g))

    rows = []
    for a in range(n + 1):
        b = n - a
        ga, ta = sym_tables[a]
        gb, tb = sym_tables[b]

        def theta_factory(chi_row, psi_row):
            def theta(h):
                h1 = tuple(abs(x) for x in h[:a])
                h2 = tuple(abs(x) - a for x in h[a:])
                neg = sum(1 for x in h[a:] if x < 0) & 1
                v = chi_row[ga.class_of_element(h1)]
                v *= psi_row[gb.class_of_element(h2)]
                return -v if neg else v
            return theta

        def in_subgroup(h):
            return (all(abs(x) <= a for x in h[:a])
                    and all(abs(x) > a for x in h[a:]))

        sub_order = group_order(a) * group_order(b)
        for chi_row in ta.integer_rows():
            for psi_row in tb.integer_rows():
                theta = theta_factory(chi_row, psi_row)
                row = []
                for t in classes:
                    g0 = reps[t]
                    acc = 0
                    for x in elements:
                        y = wmul(wmul(x, g0), winv(x))
                        if in_subgroup(y):
                            acc += theta(y)
                    if acc % sub_order:
                        raise ArithmeticError("induction sum not integral")
                    row.append(acc // sub_order)
                rows.append(tuple(row))
    return classes, rows


# ---------------------------------------------------------------------------
# bound audits


def audit_rho_bound(n: int) -> dict:
    """max |rho(w)| / (2^{k-1} k!) over both defect tables and all classes."""
    worst = Fraction(0)
    where = None
    for defect in (0, 1):
        syms, classes, values = rho_table(n, defect)
        for i, x in enumerate(syms):
            for k, t in enumerate(classes):
                bound = (1 << (len(t) - 1)) * factorial(len(t))
                r = Fraction(abs(values[i][k]), bound)
                if r > worst:
                    worst, where = r, (str(x), t)
    return {"n": n, "max_ratio": worst, "witness": where}


def audit_phi_bound(n: int) -> dict:
    """max |phi(w)| / (2^{k-1} k!) over all rank-n arrays and classes."""
    worst = Fraction(0)
    where = None
    classes = class_list(n)
    for x in arrays_of_rank(n):
        for t in classes:
            bound = (1 << (len(t) - 1)) * factorial(len(t))
            r = abs(_phi_def_mm(x.m0, x.m1, t)) / bound
            if r > worst:
                worst, where = r, (str(x), t)
    return {"n": n, "max_ratio": worst, "witness": where}


def audit_type_d_bound(n: int) -> dict:
    """Brute table of the index-2 kernel of delta, checked against the
    cycle-length bound (2^k + 1) 2^{k-1} k! and its relaxation 2^{2k} k!."""
    from .dixon import GroupData, character_table
    from .weyl import cycle_type, mul as wmul, type_d_elements

    g = GroupData(list(type_d_elements(n)), wmul)
    table = character_table(g)
    ks = [len(cycle_type(rep)) for rep in g.class_reps]
    worst = Fraction(0)
    where = None
    ok_sharp = ok_loose = True
    for i, row in enumerate(table.integer_rows()):
        for k_idx, v in enumerate(row):
            k = ks[k_idx]
            sharp = ((1 << k) + 1) * (1 << (k - 1)) * factorial(k)
            loose = (1 << (2 * k)) * factorial(k)
            if abs(v) > sharp:
                ok_sharp = False
            if abs(v) > loose:
                ok_loose = False
            r = Fraction(abs(v), loose)
            if r > worst:
                worst, where = r, (i, g.class_reps[k_idx])
    return {"n": n, "n_chars": len(table.degrees), "ok": ok_loose,
            "ok_sharp": ok_sharp, "max_ratio": worst, "witness": where}


def audit_centralizers(n_cycle: int = 5, n_sym: int = 8) -> dict:
    """Centralizer checks: the class of a single negative n-cycle has
    centralizer of order exactly 2n (brute force for n <= n_cycle);
    classes with pairwise distinct cycles have centralizer order at most
    2^k n^k; symmetric-group centralizers obey |C(w)| <= k! n^k."""
    from .weyl import (
        all_elements, brute_centralizer_order, centralizer_order, class_list,
        cycle_type, pairwise_distinct, representative,
    )
    ok_icycle = True
    ok_distinct = True
    for n in range(1, n_cycle + 1):
        els = list(all_elements(n))
        for t in class_list(n):
            c_formula = centralizer_order(t)
            c_brute = brute_centralizer_order(representative(t), els)
            if c_formula != c_brute:
                ok_icycle = False
            if t == (-n,) and c_brute != 2 * n:
                ok_icycle = False
            if pairwise_distinct(t):
                k = len(t)
                if c_brute > (1 << k) * n ** k:
                    ok_distinct = False
    # larger n via the exact product formula only
    for n in range(n_cycle + 1, 9):
        for t in class_list(n):
            if pairwise_distinct(t) and centralizer_order(t) > (1 << len(t)) * n ** len(t):
                ok_distinct = False
    ok_sym = True
    for n in range(1, n_sym + 1):
        for lam in partitions(n):
            k = len(lam)
            mult: dict[int, int] = {}
            for m in lam:
                mult[m] = mult.get(m, 0) + 1
            cent = 1
            for m, r in mult.items():
                cent *= factorial(r) * m ** r
            if cent > factorial(k) * n ** k:
                ok_sym = False
    return {"icycle_ok": ok_icycle, "distinct_ok": ok_distinct,
            "symmetric_ok": ok_sym,
            "ok": ok_icycle and ok_distinct and ok_sym}
