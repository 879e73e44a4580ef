"""Small finite fields GF(p^a), table-driven.

Elements are integer codes 0..q-1, read as base-p digit vectors giving
the coefficients of a polynomial in the generator; the modulus is the
lexicographically smallest monic irreducible of the right degree, so
every run of the program picks the same field model.  Everything here
targets tiny q (at most a few dozen) and small matrices, so clarity
beats asymptotics throughout.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np
from sympy import factorint


def _poly_trim(c: tuple[int, ...]) -> tuple[int, ...]:
    i = len(c)
    while i > 0 and c[i - 1] == 0:
        i -= 1
    return tuple(c[:i])


def _pmul_p(a, b, p):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _poly_trim(tuple(out))


def _pmod_p(a, m, p):
    a = list(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        f = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, c in enumerate(m):
            a[shift + i] = (a[shift + i] - f * c) % p
        a.pop()
    return _poly_trim(tuple(a))


def _monic_polys_p(deg, p):
    for code in range(p ** deg):
        c = []
        v = code
        for _ in range(deg):
            c.append(v % p)
            v //= p
        yield tuple(c) + (1,)


def _irreducible_p(poly, p) -> bool:
    deg = len(poly) - 1
    if deg <= 0:
        return False
    for d in range(1, deg // 2 + 1):
        for m in _monic_polys_p(d, p):
            if not _pmod_p(poly, m, p):
                return False
    return True


@lru_cache(maxsize=None)
def modulus_poly(p: int, a: int) -> tuple[int, ...]:
    """Lex-smallest monic irreducible of degree a over F_p (on the
    low-to-high coefficient tuple)."""
    if a == 1:
        return (0, 1)
    for m in _monic_polys_p(a, p):
        if _irreducible_p(m, p):
            return m
    raise AssertionError("no irreducible polynomial found")


class Field:
    """GF(q) with dense add/mul/inv tables over integer codes."""

    def __init__(self, q: int):
        fac = factorint(q)
        if len(fac) != 1:
            raise ValueError(f"{q} is not a prime power")
        (p, a), = fac.items()
        self.q = q
        self.p = p
        self.deg = a
        self.modulus = modulus_poly(p, a)

        def decode(c):
            out = []
            for _ in range(a):
                out.append(c % p)
                c //= p
            return tuple(out)

        def encode(vec):
            c = 0
            for x in reversed(vec):
                c = c * p + x
            return c

        self._decode = decode
        add = np.zeros((q, q), dtype=np.uint8)
        mul = np.zeros((q, q), dtype=np.uint8)
        for x in range(q):
            dx = decode(x)
            for y in range(x, q):
                dy = decode(y)
                s = encode(tuple((u + v) % p for u, v in zip(dx, dy)))
                add[x, y] = add[y, x] = s
                pr = _pmod_p(_pmul_p(_poly_trim(dx), _poly_trim(dy), p),
                             self.modulus, p)
                m = encode(tuple(pr) + (0,) * (a - len(pr)))
                mul[x, y] = mul[y, x] = m
        self.add_table = add
        self.mul_table = mul
        self.neg_table = np.array(
            [encode(tuple((-u) % p for u in decode(x))) for x in range(q)],
            dtype=np.uint8)
        inv = [0] * q
        for x in range(1, q):
            inv[x] = next(y for y in range(1, q) if mul[x, y] == 1)
        self.inv_table = np.array(inv, dtype=np.uint8)

    # scalar ops -----------------------------------------------------------
    def add(self, x, y):
        return int(self.add_table[x, y])

    def sub(self, x, y):
        return int(self.add_table[x, self.neg_table[y]])

    def mul(self, x, y):
        return int(self.mul_table[x, y])

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("field inverse of 0")
        return int(self.inv_table[x])

    def neg(self, x):
        return int(self.neg_table[x])

    def pow(self, x, n: int):
        n = int(n)
        if n < 0:
            x, n = self.inv(x), -n
        out = 1
        while n:
            if n & 1:
                out = self.mul(out, x)
            x = self.mul(x, x)
            n >>= 1
        return out

    def multiplicative_generator(self) -> int:
        for g in range(2, self.q):
            x, seen = g, set()
            while x not in seen:
                seen.add(x)
                x = self.mul(x, g)
            if len(seen) == self.q - 1:
                return g
        return 1

    def __repr__(self):
        return f"GF({self.q})"


@lru_cache(maxsize=None)
def field(q: int) -> Field:
    return Field(q)


# ---------------------------------------------------------------------------
# polynomials over GF(q): little-endian coefficient tuples, trimmed


def poly_trim(c) -> tuple[int, ...]:
    return _poly_trim(tuple(c))


def poly_add(a, b, F: Field):
    n = max(len(a), len(b))
    a = tuple(a) + (0,) * (n - len(a))
    b = tuple(b) + (0,) * (n - len(b))
    return _poly_trim(tuple(F.add(x, y) for x, y in zip(a, b)))


def poly_mul(a, b, F: Field):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = F.add(out[i + j], F.mul(x, y))
    return _poly_trim(tuple(out))


def poly_divmod(a, b, F: Field):
    a = list(a)
    b = _poly_trim(tuple(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b) - 1
    lead_inv = F.inv(b[-1])
    quo = [0] * max(len(a) - db, 0)
    while len(_poly_trim(tuple(a))) - 1 >= db:
        a = list(_poly_trim(tuple(a)))
        f = F.mul(a[-1], lead_inv)
        shift = len(a) - 1 - db
        quo[shift] = f
        for i, c in enumerate(b):
            a[shift + i] = F.sub(a[shift + i], F.mul(f, c))
    return _poly_trim(tuple(quo)), _poly_trim(tuple(a))


def poly_mod(a, b, F: Field):
    return poly_divmod(a, b, F)[1]


def poly_gcd(a, b, F: Field):
    a, b = _poly_trim(tuple(a)), _poly_trim(tuple(b))
    while b:
        a, b = b, poly_mod(a, b, F)
    if a:
        li = F.inv(a[-1])
        a = tuple(F.mul(c, li) for c in a)
    return a


def poly_derivative(a, F: Field):
    out = []
    for i in range(1, len(a)):
        c = a[i]
        s = 0
        for _ in range(i % F.p):
            s = F.add(s, c)
        out.append(s)
    return _poly_trim(tuple(out))


def monic_polys(deg: int, F: Field):
    """All monic polynomials of exact degree deg, lex order on the
    low-to-high coefficient vector."""
    for code in range(F.q ** deg):
        c = []
        v = code
        for _ in range(deg):
            c.append(v % F.q)
            v //= F.q
        yield tuple(c) + (1,)


@lru_cache(maxsize=None)
def _irreducibles_upto(deg: int, q: int) -> tuple[tuple[int, ...], ...]:
    F = field(q)
    out = []
    for d in range(1, deg + 1):
        for m in monic_polys(d, F):
            if all(poly_mod(m, g, F) for g in out if len(g) <= (d // 2) + 1):
                out.append(m)
    return tuple(out)


def is_irreducible(poly, F: Field) -> bool:
    poly = _poly_trim(tuple(poly))
    deg = len(poly) - 1
    if deg <= 0:
        return False
    if deg == 1:
        return True
    return all(poly_mod(poly, g, F)
               for g in _irreducibles_upto(deg // 2, F.q))


def factor_poly(poly, F: Field) -> list[tuple[tuple[int, ...], int]]:
    """Monic irreducible factors with multiplicities, lex-ordered by
    (degree, coefficients).  The unit leading coefficient is dropped."""
    poly = _poly_trim(tuple(poly))
    if not poly:
        raise ValueError("cannot factor the zero polynomial")
    if poly[-1] != 1:
        li = F.inv(poly[-1])
        poly = tuple(F.mul(c, li) for c in poly)
    out = []
    deg = len(poly) - 1
    for g in _irreducibles_upto(deg, F.q):
        if len(g) - 1 > len(poly) - 1:
            break
        mult = 0
        while True:
            quo, rem = poly_divmod(poly, g, F)
            if rem:
                break
            poly = quo
            mult += 1
        if mult:
            out.append((g, mult))
        if len(poly) == 1:
            break
    if len(poly) != 1:
        raise AssertionError("factorization did not terminate")
    return out


# ---------------------------------------------------------------------------
# matrices over GF(q): tuples of row tuples of codes


def mat_identity(n: int) -> tuple:
    return tuple(tuple(1 if i == j else 0 for j in range(n))
                 for i in range(n))


def mat_mul(a, b, F: Field):
    n, m, k = len(a), len(b[0]), len(b)
    add, mul = F.add, F.mul
    out = []
    for i in range(n):
        ai = a[i]
        row = []
        for j in range(m):
            s = 0
            for t in range(k):
                if ai[t]:
                    s = add(s, mul(ai[t], b[t][j]))
            row.append(s)
        out.append(tuple(row))
    return tuple(out)


def mat_scale(a, c, F: Field):
    return tuple(tuple(F.mul(c, v) for v in row) for row in a)


def mat_add(a, b, F: Field):
    return tuple(tuple(F.add(x, y) for x, y in zip(ra, rb))
                 for ra, rb in zip(a, b))


def mat_pow(a, n: int, F: Field):
    out = mat_identity(len(a))
    base = a
    n = int(n)
    while n:
        if n & 1:
            out = mat_mul(out, base, F)
        base = mat_mul(base, base, F)
        n >>= 1
    return out


def mat_rank(a, F: Field) -> int:
    rows = [list(r) for r in a]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    rank = 0
    for c in range(ncols):
        piv = next((i for i in range(rank, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        t = F.inv(rows[rank][c])
        rows[rank] = [F.mul(t, v) for v in rows[rank]]
        for i in range(nrows):
            if i != rank and rows[i][c]:
                f = rows[i][c]
                rows[i] = [F.sub(x, F.mul(f, y))
                           for x, y in zip(rows[i], rows[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


def mat_det(a, F: Field) -> int:
    rows = [list(r) for r in a]
    n = len(rows)
    det = 1
    for c in range(n):
        piv = next((i for i in range(c, n) if rows[i][c]), None)
        if piv is None:
            return 0
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            det = F.neg(det)
        det = F.mul(det, rows[c][c])
        t = F.inv(rows[c][c])
        for i in range(c + 1, n):
            if rows[i][c]:
                f = F.mul(rows[i][c], t)
                rows[i] = [F.sub(x, F.mul(f, y))
                           for x, y in zip(rows[i], rows[c])]
    return det


def mat_inv(a, F: Field):
    n = len(a)
    rows = [list(r) + [1 if i == j else 0 for j in range(n)]
            for i, r in enumerate(a)]
    for c in range(n):
        piv = next((i for i in range(c, n) if rows[i][c]), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        rows[c], rows[piv] = rows[piv], rows[c]
        t = F.inv(rows[c][c])
        rows[c] = [F.mul(t, v) for v in rows[c]]
        for i in range(n):
            if i != c and rows[i][c]:
                f = rows[i][c]
                rows[i] = [F.sub(x, F.mul(f, y))
                           for x, y in zip(rows[i], rows[c])]
    return tuple(tuple(r[n:]) for r in rows)


def char_poly(a, F: Field) -> tuple[int, ...]:
    """det(xI - a) by cofactor expansion in GF(q)[x]; fine for n <= 4."""
    n = len(a)
    entries = [[(F.neg(a[i][j]), 1) if i == j else (F.neg(a[i][j]),)
                for j in range(n)] for i in range(n)]

    def det(rows, cols):
        if len(cols) == 1:
            return entries[rows[0]][cols[0]]
        total = ()
        r = rows[0]
        rest = rows[1:]
        for t, c in enumerate(cols):
            if entries[r][c] == ():
                continue
            sub = det(rest, cols[:t] + cols[t + 1:])
            term = poly_mul(entries[r][c], sub, F)
            if t % 2:
                term = tuple(F.neg(x) for x in term)
            total = poly_add(total, term, F)
        return total

    cp = det(tuple(range(n)), tuple(range(n)))
    cp = cp + (0,) * (n + 1 - len(cp))
    assert cp[-1] == 1, "characteristic polynomial is monic"
    return cp


def companion_matrix(poly, F: Field):
    """Companion matrix of a monic polynomial (low-to-high coeffs)."""
    n = len(poly) - 1
    if poly[-1] != 1:
        raise ValueError("companion matrix wants a monic polynomial")
    cols = []
    for j in range(n):
        if j < n - 1:
            cols.append(tuple(1 if i == j + 1 else 0 for i in range(n)))
        else:
            cols.append(tuple(F.neg(poly[i]) for i in range(n)))
    return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))


def mat_eval_poly(poly, a, F: Field):
    """poly(a) by Horner's rule."""
    n = len(a)
    out = tuple(tuple(0 for _ in range(n)) for _ in range(n))
    for c in reversed(poly):
        out = mat_mul(out, a, F)
        if c:
            out = tuple(tuple(F.add(v, c if i == j else 0)
                              for j, v in enumerate(row))
                        for i, row in enumerate(out))
    return out
