"""Explicit small matrix groups over GF(q).

Groups are closed out of standard generators with batched table-driven
matrix products (numpy gathers over the field tables), elements are
packed into base-q integer keys, and conjugacy classes come from
generator-orbit refinement.  The resulting object is plug-compatible
with the character-table engine but also carries vectorized class
matrices, which is what makes the bigger instances tractable.

Inverses are tracked during the closure itself: each discovered product
x*g learns its inverse g^-1 * x^-1 in the same sweep, so no elementwise
inversion pass is ever needed.
"""

from __future__ import annotations

from functools import reduce
from math import gcd

import numpy as np

from .gf import (
    Field, char_poly, companion_matrix, factor_poly, field, is_irreducible,
    mat_det, mat_eval_poly, mat_identity, mat_inv, mat_mul, mat_pow, mat_rank,
    monic_polys,
)

ORDER_CAP = 200_000


def group_order(family: str, n: int, q: int) -> int:
    if family == "GL":
        out = 1
        for i in range(n):
            out *= q ** n - q ** i
        return out
    if family == "SL":
        return group_order("GL", n, q) // (q - 1)
    if family == "Sp":
        if n % 2:
            raise ValueError("symplectic groups need even dimension")
        m = n // 2
        out = q ** (m * m)
        for i in range(1, m + 1):
            out *= q ** (2 * i) - 1
        return out
    raise ValueError(f"unknown family {family!r}")


def symplectic_form(n: int, F: Field) -> tuple:
    """Antidiagonal form with +1 above the center and -1 below."""
    m = n // 2
    j = [[0] * n for _ in range(n)]
    for i in range(m):
        j[i][n - 1 - i] = 1
        j[n - 1 - i][i] = F.neg(1)
    return tuple(tuple(r) for r in j)


def _transvection(n: int, i: int, j: int, t: int) -> tuple:
    m = [[1 if a == b else 0 for b in range(n)] for a in range(n)]
    m[i][j] = t
    return tuple(tuple(r) for r in m)


def _symplectic_transvection(v, lam, jform, F: Field):
    """x -> x + lam <x, v> v, as the matrix I - lam v (v^T J)."""
    n = len(v)
    jv = [reduce(F.add, (F.mul(v[k], jform[k][c]) for k in range(n)), 0)
          for c in range(n)]
    m = [[F.sub(1 if a == b else 0, F.mul(lam, F.mul(v[a], jv[b])))
          for b in range(n)] for a in range(n)]
    return tuple(tuple(r) for r in m)


def standard_generators(family: str, n: int, q: int) -> list[tuple]:
    F = field(q)
    alpha = F.multiplicative_generator()
    # powers of a generator form an additive basis over the prime field,
    # so these scalars span each root group
    scalars = [F.pow(alpha, k) for k in range(F.deg)]
    if family in ("GL", "SL"):
        gens = [_transvection(n, 0, 1, t) for t in scalars]
        gens += [_transvection(n, 1, 0, t) for t in scalars]
        if n >= 3:
            gens.append(tuple(tuple(1 if j == (i + 1) % n else 0
                                    for j in range(n)) for i in range(n)))
        if family == "GL" and q > 2:
            gens.append(tuple(tuple(alpha if i == j == 0 else
                                    (1 if i == j else 0)
                                    for j in range(n)) for i in range(n)))
        return gens
    if family == "Sp":
        jform = symplectic_form(n, F)
        basis = [tuple(1 if k == i else 0 for k in range(n))
                 for i in range(n)]
        mixed = [tuple(F.add(a, b) for a, b in zip(basis[i], basis[j]))
                 for i in range(n) for j in range(i + 1, n)]
        gens = []
        for v in basis + mixed:
            for lam in scalars:
                g = _symplectic_transvection(v, lam, jform, F)
                if g not in gens and g != mat_identity(n):
                    gens.append(g)
        return gens
    raise ValueError(f"unknown family {family!r}")


class MatrixGroup:
    """Closed matrix group, duck-typed to the table engine's group
    interface (elements are packed integer keys) with vectorized class
    matrices bolted on."""

    def __init__(self, family: str, n: int, q: int):
        expect = group_order(family, n, q)
        if expect > ORDER_CAP:
            raise ValueError(
                f"|{family}_{n}({q})| = {expect} exceeds the cap {ORDER_CAP}")
        self.family = family
        self.n = n
        self.q = q
        self.F = field(q)
        self.expected_order = expect
        self._pows = (q ** np.arange(n * n, dtype=np.int64))
        gens = standard_generators(family, n, q)
        self._close(gens)
        if self.size != expect:
            raise AssertionError(
                f"closure produced {self.size} elements, wanted {expect}")
        if family == "Sp":
            self._assert_symplectic()
        self._build_classes()

    # -- batched arithmetic on uint8 code arrays ---------------------------
    def _bmm(self, a, b):
        mul = self.F.mul_table
        add = self.F.add_table
        x = mul[a[..., :, :, None], b[..., None, :, :]]
        acc = x[..., 0, :]
        for t in range(1, self.n):
            acc = add[acc, x[..., t, :]]
        return acc

    def _pack(self, mats) -> np.ndarray:
        flat = mats.reshape(mats.shape[:-2] + (self.n * self.n,))
        return flat.astype(np.int64) @ self._pows

    def _locate(self, keys) -> np.ndarray:
        pos = np.searchsorted(self._keys, keys)
        if np.any(pos >= self.size) or np.any(self._keys[pos] != keys):
            raise KeyError("element not in group")
        return pos

    def mat_of(self, key: int) -> tuple:
        m = self.mats[self.index[key]]
        return tuple(tuple(int(v) for v in row) for row in m)

    def key_of(self, mat) -> int:
        arr = np.array(mat, dtype=np.uint8)
        return int(self._pack(arr))

    # -- closure ------------------------------------------------------------
    def _close(self, gens):
        n = self.n
        gmats = [np.array(g, dtype=np.uint8) for g in gens]
        ginvs = [np.array(mat_inv(g, self.F), dtype=np.uint8) for g in gens]
        ident = np.array(mat_identity(n), dtype=np.uint8)
        seen = {int(self._pack(ident))}
        mats = [ident[None]]
        invs = [ident[None]]
        frontier, finv = ident[None], ident[None]
        while frontier.shape[0]:
            batch_m, batch_i = [], []
            for g, gi in zip(gmats, ginvs):
                batch_m.append(self._bmm(frontier, g))
                batch_i.append(self._bmm(gi, finv))
            prod = np.concatenate(batch_m)
            pinv = np.concatenate(batch_i)
            keys = self._pack(prod)
            fresh = []
            for t, k in enumerate(keys.tolist()):
                if k not in seen:
                    seen.add(k)
                    fresh.append(t)
            if not fresh:
                break
            frontier = prod[fresh]
            finv = pinv[fresh]
            mats.append(frontier)
            invs.append(finv)
        allm = np.concatenate(mats)
        alli = np.concatenate(invs)
        keys = self._pack(allm)
        order = np.argsort(keys, kind="stable")
        self.mats = np.ascontiguousarray(allm[order])
        self._keys = keys[order]
        self.size = self.mats.shape[0]
        self.inv_idx = self._locate(self._pack(alli[order]))
        self.elements = [int(k) for k in self._keys]
        self.index = {k: i for i, k in enumerate(self.elements)}
        self.identity = int(self._pack(ident))
        self.gen_mats = gmats
        self.gen_invs = ginvs

    def _assert_symplectic(self):
        jf = np.array(symplectic_form(self.n, self.F), dtype=np.uint8)
        trans = np.ascontiguousarray(self.mats.transpose(0, 2, 1))
        prod = self._bmm(self._bmm(trans, jf), self.mats)
        if np.any(prod != jf[None]):
            raise AssertionError("closure left the symplectic form")

    # -- conjugacy classes ---------------------------------------------------
    def _build_classes(self):
        size = self.size
        class_of = np.full(size, -1, dtype=np.int32)
        raw = []
        for i0 in range(size):
            if class_of[i0] >= 0:
                continue
            cid = len(raw)
            class_of[i0] = cid
            members = [i0]
            frontier = np.array([i0], dtype=np.int64)
            while frontier.size:
                block = self.mats[frontier]
                nxt = []
                for g, gi in zip(self.gen_mats, self.gen_invs):
                    conj = self._bmm(gi, self._bmm(block, g))
                    idx = self._locate(self._pack(conj))
                    new = idx[class_of[idx] < 0]
                    if new.size:
                        new = np.unique(new)
                        new = new[class_of[new] < 0]
                        class_of[new] = cid
                        nxt.append(new)
                if nxt:
                    frontier = np.concatenate(nxt)
                    members.extend(frontier.tolist())
                else:
                    frontier = np.array([], dtype=np.int64)
            raw.append(sorted(members))
        keyed = []
        for members in raw:
            rep = self.elements[members[0]]
            keyed.append((len(members), self.order_of(rep), rep, members))
        keyed.sort(key=lambda t: (t[0], t[1], t[2]))
        self.classes = [t[3] for t in keyed]
        self.class_reps = [t[2] for t in keyed]
        self.class_sizes = [t[0] for t in keyed]
        self.class_orders = [t[1] for t in keyed]
        co = np.empty(size, dtype=np.int32)
        for cid, members in enumerate(self.classes):
            co[members] = cid
        self.class_of = co
        self.inverse_class = [
            int(co[self.inv_idx[self.index[rep]]]) for rep in self.class_reps]
        if self.class_reps[0] != self.identity:
            raise AssertionError("identity class did not sort first")

    # -- engine interface -----------------------------------------------------
    def mul(self, ka: int, kb: int) -> int:
        a = self.mats[self.index[ka]]
        b = self.mats[self.index[kb]]
        return int(self._pack(self._bmm(a, b)))

    def inverse(self, key: int) -> int:
        return self.elements[self.inv_idx[self.index[key]]]

    def order_of(self, key: int) -> int:
        o, cur = 1, key
        while cur != self.identity:
            cur = self.mul(cur, key)
            o += 1
        return o

    def class_of_element(self, key: int) -> int:
        return int(self.class_of[self.index[key]])

    def exponent(self) -> int:
        return reduce(lambda a, b: a * b // gcd(a, b), self.class_orders, 1)

    def class_matrix_counts(self, i: int) -> np.ndarray:
        r = len(self.classes)
        members = np.asarray(self.classes[i], dtype=np.int64)
        xinv = self.mats[self.inv_idx[members]]
        out = np.zeros((r, r), dtype=np.int64)
        for k, rep in enumerate(self.class_reps):
            prod = self._bmm(xinv, self.mats[self.index[rep]])
            tgt = self.class_of[self._locate(self._pack(prod))]
            out[:, k] = np.bincount(tgt, minlength=r)
        return out

    # -- structural subsets ----------------------------------------------------
    def upper_triangular_indices(self) -> np.ndarray:
        """Indices of the members with zero below the diagonal (the
        standard Borel subgroup for every family built here)."""
        tril = np.tril(np.ones((self.n, self.n), dtype=bool), -1)
        mask = ~np.any(self.mats[:, tril], axis=1)
        return np.nonzero(mask)[0]

    def parabolic_radical_indices(self, blocks) -> np.ndarray:
        """Indices of the unipotent radical of the standard parabolic
        with the given diagonal block sizes: identity on the blocks,
        zero below, anything above."""
        if sum(blocks) != self.n:
            raise ValueError("block sizes must sum to the dimension")
        starts = [0]
        for b in blocks:
            starts.append(starts[-1] + b)
        inside = np.zeros((self.n, self.n), dtype=bool)
        for s, e in zip(starts, starts[1:]):
            inside[s:e, s:e] = True
        ident = np.eye(self.n, dtype=np.uint8)
        below = np.tril(np.ones((self.n, self.n), dtype=bool), -1) & ~inside
        ok_diag = ~np.any((self.mats != ident[None]) & inside[None], axis=(1, 2))
        ok_below = ~np.any(self.mats[:, below], axis=1)
        return np.nonzero(ok_diag & ok_below)[0]

    def center_keys(self) -> list[int]:
        mask = np.ones(self.size, dtype=bool)
        for g in self.gen_mats:
            mask &= self._pack(self._bmm(self.mats, g)) == \
                self._pack(self._bmm(g, self.mats))
        return [self.elements[i] for i in np.nonzero(mask)[0]]

    def __repr__(self):
        return f"{self.family}_{self.n}({self.q}) of order {self.size}"


def build_group(family: str, n: int, q: int) -> MatrixGroup:
    return MatrixGroup(family, n, q)


# ---------------------------------------------------------------------------
# element predicates


def support(mat, q: int) -> int:
    """Codimension of the largest eigenspace over the algebraic closure:
    n minus the best (nullity of f(x))/deg(f) over irreducible factors f
    of the characteristic polynomial."""
    F = field(q)
    n = len(mat)
    cp = char_poly(mat, F)
    best = 0
    for f, _mult in factor_poly(cp, F):
        d = len(f) - 1
        nullity = n - mat_rank(mat_eval_poly(f, mat, F), F)
        best = max(best, nullity // d)
    return n - best


def cycle_data(mat, q: int) -> tuple[tuple[int, int], ...]:
    """Sorted (degree, multiplicity) pairs of the irreducible factors of
    the characteristic polynomial."""
    F = field(q)
    cp = char_poly(mat, F)
    return tuple(sorted((len(f) - 1, m) for f, m in factor_poly(cp, F)))


def regular_semisimple(mat, q: int) -> bool:
    return all(m == 1 for _d, m in cycle_data(mat, q))


def coxeter_torus_generator(p: int, q: int):
    """Generator of the norm-one subtorus of a degree-p field torus in
    SL_p(q): scan companion matrices of irreducible degree-p polynomials
    until M^(q-1) has the full order (q^p - 1)/(q - 1), an irreducible
    characteristic polynomial, and determinant one."""
    F = field(q)
    target = (q ** p - 1) // (q - 1)
    tried = 0
    for poly in monic_polys(p, F):
        if not is_irreducible(poly, F):
            continue
        tried += 1
        m = companion_matrix(poly, F)
        t = mat_pow(m, q - 1, F)
        if mat_det(t, F) != 1:
            continue
        o, cur = 1, t
        ident = mat_identity(p)
        while cur != ident and o <= target:
            cur = mat_mul(cur, t, F)
            o += 1
        if o != target:
            continue
        if not is_irreducible(char_poly(t, F), F):
            continue
        return t
    raise ArithmeticError(
        f"no norm-one torus generator found after {tried} candidates")
