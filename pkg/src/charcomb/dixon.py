"""Character tables of explicit finite groups.

The table engine follows the classical commutative-algebra route: class
sums span the center of the group algebra over a prime field F_ell with
ell = 1 mod exponent(G) and ell > 2 sqrt(|G|); common eigenvectors of
the class-multiplication matrices are the central characters, degrees
come back from orthogonality through a modular square root, and exact
character values are lifted as root-of-unity multiplicity vectors in
Z[x]/(x^o - 1), valid because multiplicities are bounded by the degree,
hence below ell.  Everything is deterministic: classes are sorted
canonically, class matrices are consumed smallest first, eigenvalues
are scanned in ascending order.
"""

from __future__ import annotations

from functools import reduce
from math import gcd

import numpy as np
from sympy import isprime, primitive_root
from sympy.ntheory.residue_ntheory import sqrt_mod

from .cyclo import reduce_mod_phi, represents_integer


class GroupData:
    """A finite group as an explicit element list with multiplication.

    Elements must be hashable and totally orderable (tuples of ints, in
    practice).  Pass `gens` for anything beyond a few thousand elements
    so conjugacy classes come from generator orbits instead of sweeps
    over the whole group; pass `inv` when inversion is cheaper than
    running the power orbit.
    """

    def __init__(self, elements, mul, inv=None, identity=None, gens=None):
        self.elements = list(elements)
        self.mul = mul
        self.index = {g: i for i, g in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise ValueError("duplicate elements")
        self.size = len(self.elements)
        if identity is None:
            x0 = self.elements[0]
            for g in self.elements:
                if mul(g, x0) == x0 and mul(x0, g) == x0:
                    identity = g
                    break
        if identity is None:
            raise ValueError("no identity found")
        self.identity = identity
        self._inv_fn = inv
        self._inv_cache: dict = {}
        self._order_cache: dict = {}
        self._build_classes(gens)

    def inverse(self, g):
        if self._inv_fn is not None:
            return self._inv_fn(g)
        h = self._inv_cache.get(g)
        if h is not None:
            return h
        prev, cur = g, self.mul(g, g)
        while cur != self.identity:
            prev, cur = cur, self.mul(cur, g)
        self._inv_cache[g] = prev
        return prev

    def order_of(self, g) -> int:
        o = self._order_cache.get(g)
        if o is not None:
            return o
        o, cur = 1, g
        while cur != self.identity:
            cur = self.mul(cur, g)
            o += 1
        self._order_cache[g] = o
        return o

    def _build_classes(self, gens):
        mul = self.mul
        conj_by = list(gens) if gens else self.elements
        pairs = [(g, self.inverse(g)) for g in conj_by]
        class_of = [-1] * self.size
        raw: list[list[int]] = []
        for i0 in range(self.size):
            if class_of[i0] >= 0:
                continue
            cid = len(raw)
            class_of[i0] = cid
            members = [i0]
            stack = [i0]
            while stack:
                gi = self.elements[stack.pop()]
                for g, g_ in pairs:
                    j = self.index[mul(mul(g, gi), g_)]
                    if class_of[j] < 0:
                        class_of[j] = cid
                        members.append(j)
                        stack.append(j)
            raw.append(members)
        keyed = []
        for members in raw:
            rep = min(self.elements[i] for i in members)
            keyed.append((len(members), self.order_of(rep), rep, members))
        keyed.sort(key=lambda t: (t[0], t[1], t[2]))
        self.classes = [sorted(t[3]) for t in keyed]
        self.class_reps = [t[2] for t in keyed]
        self.class_sizes = [t[0] for t in keyed]
        self.class_orders = [t[1] for t in keyed]
        self.class_of = [0] * self.size
        for cid, members in enumerate(self.classes):
            for i in members:
                self.class_of[i] = cid
        self.inverse_class = [
            self.class_of[self.index[self.inverse(rep)]]
            for rep in self.class_reps]
        if self.class_reps[0] != self.identity:
            raise AssertionError("identity class did not sort first")

    def class_of_element(self, g) -> int:
        return self.class_of[self.index[g]]

    def exponent(self) -> int:
        return reduce(lambda a, b: a * b // gcd(a, b), self.class_orders, 1)


# ---------------------------------------------------------------------------
# linear algebra over F_ell


def _rref(rows, p):
    rows = [[v % p for v in row] for row in rows]
    pivots = []
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        t = pow(rows[rank][c], p - 2, p)
        rows[rank] = [(v * t) % p for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(a - f * b) % p
                           for a, b in zip(rows[i], rows[rank])]
        pivots.append(c)
        rank += 1
        if rank == len(rows):
            break
    return rows[:rank], pivots


def _restrict(mat_np, basis, pivots, p):
    """Matrix of `mat_np` on span(basis); basis must be rref and invariant."""
    b = np.array(basis, dtype=np.int64)
    w = (b @ mat_np.T) % p          # row t = mat . basis[t]
    coords = w[:, pivots]
    if np.any((w - coords @ b) % p):
        raise AssertionError("subspace not invariant under class matrix")
    return [[int(coords[t, k]) for t in range(len(basis))]
            for k in range(len(basis))]


def _charpoly_mod(a, p):
    """Monic characteristic polynomial mod p, constant term first."""
    n = len(a)
    if n == 0:
        return [1]
    h = [row[:] for row in a]
    for j in range(n - 2):
        piv = next((i for i in range(j + 1, n) if h[i][j]), None)
        if piv is None:
            continue
        if piv != j + 1:
            h[piv], h[j + 1] = h[j + 1], h[piv]
            for row in h:
                row[piv], row[j + 1] = row[j + 1], row[piv]
        t = pow(h[j + 1][j], p - 2, p)
        for i in range(j + 2, n):
            f = (h[i][j] * t) % p
            if f:
                hj = h[j + 1]
                hi = h[i]
                for c in range(n):
                    hi[c] = (hi[c] - f * hj[c]) % p
                for rr in range(n):
                    h[rr][j + 1] = (h[rr][j + 1] + f * h[rr][i]) % p
    polys = [[1]]
    for m in range(1, n + 1):
        d = h[m - 1][m - 1]
        prev = polys[m - 1]
        cur = [0] * (m + 1)
        for idx, c in enumerate(prev):
            cur[idx + 1] = c
        for idx, c in enumerate(prev):
            cur[idx] = (cur[idx] - d * c) % p
        prod = 1
        for i in range(m - 1, 0, -1):
            prod = (prod * h[i][i - 1]) % p
            coefm = (h[i - 1][m - 1] * prod) % p
            if coefm:
                for idx, c in enumerate(polys[i - 1]):
                    cur[idx] = (cur[idx] - coefm * c) % p
        polys.append([c % p for c in cur])
    return polys[n]


def _poly_roots_mod(poly, p):
    """Ascending distinct roots, by direct scan over the field."""
    roots = []
    for lam in range(p):
        acc = 0
        for c in reversed(poly):
            acc = (acc * lam + c) % p
        if acc == 0:
            roots.append(lam)
    return roots


def _kernel(a, p):
    """Basis of the nullspace of a square matrix mod p."""
    n = len(a)
    rows, pivots = _rref([row[:] for row in a], p)
    pivset = set(pivots)
    out = []
    for fc in (c for c in range(n) if c not in pivset):
        v = [0] * n
        v[fc] = 1
        for k, pc in enumerate(pivots):
            v[pc] = (-rows[k][fc]) % p
        out.append(v)
    return out


# ---------------------------------------------------------------------------
# the table


class CharacterTable:
    def __init__(self, group: GroupData, ell: int, values, degrees):
        self.group = group
        self.ell = ell
        self.values = values      # values[i][k]: int tuple in Z[x]/(x^o_k - 1)
        self.degrees = degrees
        self.class_sizes = group.class_sizes
        self.class_orders = group.class_orders
        self.class_reps = group.class_reps
        self.inverse_class = group.inverse_class
        self.exponent = group.exponent()

    @property
    def n_classes(self) -> int:
        return len(self.class_sizes)

    def integer_value(self, i: int, k: int) -> int:
        """The (i, k) entry as a rational integer; raises if it is not one."""
        red = reduce_mod_phi(self.values[i][k], self.class_orders[k])
        if any(red[1:]):
            raise ValueError(
                f"character {i} at class {k} is not a rational integer")
        return red[0]

    def integer_rows(self):
        return [tuple(self.integer_value(i, k) for k in range(self.n_classes))
                for i in range(len(self.values))]


def character_table(gd: GroupData) -> CharacterTable:
    r = len(gd.classes)
    if r == 1:
        return CharacterTable(gd, 3, [[(1,)]], [1])

    e = gd.exponent()
    n = gd.size
    ell = e + 1
    while not (isprime(ell) and ell * ell > 4 * n):
        ell += e

    # lazy class matrices; the identity class is useless, smallest first
    class_order = sorted(range(1, r), key=lambda i: (gd.class_sizes[i], i))

    def class_matrix(i):
        counts = getattr(gd, "class_matrix_counts", None)
        if counts is not None:
            return np.asarray(counts(i), dtype=np.int64) % ell
        mat = np.zeros((r, r), dtype=np.int64)
        invs = [gd.inverse(gd.elements[t]) for t in gd.classes[i]]
        for k, rep in enumerate(gd.class_reps):
            for xinv in invs:
                mat[gd.class_of[gd.index[gd.mul(xinv, rep)]], k] += 1
        return mat % ell

    spaces = [_rref([[1 if c == t else 0 for c in range(r)]
                     for t in range(r)], ell)]
    for i in class_order:
        if all(len(b) == 1 for b, _ in spaces):
            break
        mat = class_matrix(i)
        nxt = []
        for basis, pivots in spaces:
            if len(basis) == 1:
                nxt.append((basis, pivots))
                continue
            a = _restrict(mat, basis, pivots, ell)
            roots = _poly_roots_mod(_charpoly_mod(a, ell), ell)
            if len(roots) == 1:
                nxt.append((basis, pivots))
                continue
            for lam in roots:
                shifted = [[(v - (lam if s == t else 0)) % ell
                            for t, v in enumerate(row)]
                           for s, row in enumerate(a)]
                ambs = []
                for kv in _kernel(shifted, ell):
                    amb = [0] * r
                    for coef, brow in zip(kv, basis):
                        if coef:
                            for c, bv in enumerate(brow):
                                amb[c] = (amb[c] + coef * bv) % ell
                    ambs.append(amb)
                nxt.append(_rref(ambs, ell))
        spaces = nxt
    if not all(len(b) == 1 for b, _ in spaces):
        raise AssertionError("class matrices failed to split the center")

    # normalized central characters: omega_k = |C_k| chi(g_k) / chi(1)
    omegas = []
    for basis, _ in spaces:
        v = basis[0]
        if v[0] == 0:
            raise AssertionError("eigenvector vanishes at the identity class")
        t = pow(v[0], ell - 2, ell)
        omegas.append([x * t % ell for x in v])
    inv_sizes = [pow(s, ell - 2, ell) for s in gd.class_sizes]

    rows_mod = []
    degrees = []
    for om in omegas:
        s = sum(om[k] * om[gd.inverse_class[k]] % ell * inv_sizes[k]
                for k in range(r)) % ell
        d2 = n * pow(s, ell - 2, ell) % ell
        d = sqrt_mod(d2, ell)
        if d is None:
            raise AssertionError("degree is not a square mod ell")
        d = min(d, ell - d)
        degrees.append(d)
        rows_mod.append([d * om[k] % ell * inv_sizes[k] % ell
                         for k in range(r)])
    if sum(d * d for d in degrees) != n:
        raise AssertionError("degree squares do not sum to the group order")

    # exact values: chi(g_k) = sum_j m_j zeta_o^j with m_j the eigenvalue
    # multiplicities of the representative, recovered by a mod-ell discrete
    # Fourier transform over its power map and lifted directly because
    # 0 <= m_j <= degree < ell
    gprim = primitive_root(ell)
    powmaps = []
    dfts = []
    for k in range(r):
        o = gd.class_orders[k]
        rep = gd.class_reps[k]
        pm = []
        cur = gd.identity
        for _ in range(o):
            pm.append(gd.class_of[gd.index[cur]])
            cur = gd.mul(cur, rep)
        powmaps.append(pm)
        zinv = pow(pow(gprim, (ell - 1) // o, ell), ell - 2, ell)
        dft = np.empty((o, o), dtype=np.int64)
        for j in range(o):
            w = pow(zinv, j, ell)
            acc = 1
            for t in range(o):
                dft[j, t] = acc
                acc = acc * w % ell
        dfts.append(dft)

    values = []
    for i, row in enumerate(rows_mod):
        out_row = []
        for k in range(r):
            o = gd.class_orders[k]
            chivec = np.array([row[pc] for pc in powmaps[k]], dtype=np.int64)
            oinv = pow(o, ell - 2, ell)
            raw = (dfts[k] @ chivec) % ell
            ms = [int(v) * oinv % ell for v in raw]
            if any(m > degrees[i] for m in ms) or sum(ms) != degrees[i]:
                raise AssertionError("multiplicity lift out of range")
            out_row.append(tuple(ms))
        values.append(out_row)

    order = sorted(range(len(values)), key=lambda i: (degrees[i], values[i]))
    return CharacterTable(gd, ell,
                          [values[i] for i in order],
                          [degrees[i] for i in order])


# ---------------------------------------------------------------------------
# exact verification


def _circ_compact(v1, v2, o):
    """Circular product of two length-o multiplicity vectors, as int64."""
    full = np.convolve(v1, v2)
    out = full[:o].copy()
    if len(full) > o:
        out[:len(full) - o] += full[o:]
    return out


def verify_table(table: CharacterTable) -> dict:
    """Exact orthogonality (both kinds), degree sum, degree divisibility.

    Inner products are accumulated as integer vectors in Z[x]/(x^e - 1)
    and compared with their expected rational integer through the trace
    form of Q(zeta_e), which avoids any cyclotomic division.
    """
    g = table.group
    n = g.size
    r = table.n_classes
    e = table.exponent
    orders = table.class_orders
    sizes = table.class_sizes
    invc = table.inverse_class
    nchars = len(table.values)
    vals = [[np.array(table.values[i][k], dtype=np.int64) for k in range(r)]
            for i in range(nchars)]
    steps = [np.arange(orders[k], dtype=np.int64) * (e // orders[k])
             for k in range(r)]

    ok_first = True
    for i in range(nchars):
        for i2 in range(i, nchars):
            acc = np.zeros(e, dtype=np.int64)
            for k in range(r):
                prod = _circ_compact(vals[i][k], vals[i2][invc[k]], orders[k])
                acc[steps[k]] += sizes[k] * prod
            if not represents_integer(acc, e, n if i == i2 else 0):
                ok_first = False

    # second kind: the sum over characters becomes one integer matrix
    # product per column pair, scattered onto the exponent grid
    ok_second = True
    stacks = [np.array([table.values[i][k] for i in range(nchars)],
                       dtype=np.int64) for k in range(r)]
    for k in range(r):
        for k2 in range(k, r):
            m = stacks[k].T @ stacks[invc[k2]]
            expo = (steps[k][:, None] + steps[invc[k2]][None, :]) % e
            acc = np.zeros(e, dtype=np.int64)
            np.add.at(acc, expo.ravel(), m.ravel())
            want = n // sizes[k] if k == k2 else 0
            if not represents_integer(acc, e, want):
                ok_second = False

    ok_sum = sum(d * d for d in table.degrees) == n
    ok_div = all(n % d == 0 for d in table.degrees)
    return {"first_orthogonality": ok_first,
            "second_orthogonality": ok_second,
            "degree_square_sum": ok_sum,
            "degree_divides_order": ok_div,
            "ok": ok_first and ok_second and ok_sum and ok_div}
