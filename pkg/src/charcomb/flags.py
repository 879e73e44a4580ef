"""Flag counting over GF(q), exact and by brute enumeration.

A flag type is a strictly increasing tuple a = (a_1 < ... < a_k) of
subspace dimensions inside F_q^N.  The count F_a(N) has a closed product
form, a telescoping Gaussian-binomial form, sharp power-of-q bounds, and
a one-step ratio law in N; all are implemented so they can be played
against each other.

For a semisimple element with given eigenspace multiplicities the number
of stable flags splits eigenspace by eigenspace, giving a sum of products
of Gaussian chains over dimension matrices.  Dividing by q^(a_k * supp)
times F_a(N) leaves a relative error that shrinks like q^(-N/2); the
report carries that error exactly.

The brute routes enumerate row-reduced echelon bases and recurse through
induced actions on coefficient space, and exist purely to keep the
closed forms honest on small instances.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product

from .gf import Field, field
from .tableaux import inverse_kostka_row


def _check_type(a, n: int) -> tuple[int, ...]:
    a = tuple(int(x) for x in a)
    if any(x <= 0 for x in a) or any(
            a[i] >= a[i + 1] for i in range(len(a) - 1)):
        raise ValueError(f"flag type must be strictly increasing, got {a}")
    if a and a[-1] > n:
        raise ValueError(f"flag type {a} does not fit in dimension {n}")
    return a


@lru_cache(maxsize=None)
def gaussian_binomial(n: int, k: int, q: int) -> int:
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    out, rem = divmod(num, den)
    assert rem == 0
    return out


def chain_count(m: int, dims, q: int) -> int:
    """Chains of subspaces of F_q^m with the given weakly increasing
    dimensions (repeats allowed, they pin consecutive steps equal)."""
    dims = tuple(dims)
    if any(dims[i] > dims[i + 1] for i in range(len(dims) - 1)):
        raise ValueError(f"dimensions must be weakly increasing, got {dims}")
    out = 1
    upper = m
    for d in reversed(dims):
        out *= gaussian_binomial(upper, d, q)
        upper = d
    return out


def flag_count(a, n: int, q: int) -> int:
    """Number of flags of type a in F_q^n, as a telescoped product of
    Gaussian binomials."""
    a = _check_type(a, n)
    return chain_count(n, a, q)


def flag_count_product(a, n: int, q: int) -> Fraction:
    """The same count written as a single ratio of (q^j - 1) products
    over the gap structure of the type; returned unreduced as a Fraction
    so the test suite can insist it is the integer it claims to be."""
    a = _check_type(a, n)
    gaps = [b - c for b, c in zip(a + (n,), (0,) + a)]
    num = Fraction(1)
    for j in range(1, n + 1):
        num *= q ** j - 1
    den = Fraction(1)
    for g in gaps:
        for j in range(1, g + 1):
            den *= q ** j - 1
    return num / den


def flag_dimension(a, n: int) -> int:
    """Sum of products of distinct gap pairs: the q-degree of F_a(n)."""
    a = _check_type(a, n)
    gaps = [b - c for b, c in zip(a + (n,), (0,) + a)]
    total = 0
    for i in range(len(gaps)):
        for j in range(i + 1, len(gaps)):
            total += gaps[i] * gaps[j]
    return total


def flag_bounds_ok(a, n: int, q: int) -> bool:
    """q^d / 4 < F_a(n) < 4^k q^d with d the flag dimension."""
    a = _check_type(a, n)
    if not a:
        raise ValueError("bounds are stated for nonempty types")
    f = flag_count(a, n, q)
    d = flag_dimension(a, n)
    return 4 * f > q ** d and f < 4 ** len(a) * q ** d


def flag_ratio_ok(a, n: int, q: int) -> bool:
    """F_a(n+1) / F_a(n) = (q^(n+1) - 1) / (q^(n+1-a_k) - 1)."""
    a = _check_type(a, n)
    lhs = flag_count(a, n + 1, q) * (q ** (n + 1 - a[-1]) - 1)
    rhs = flag_count(a, n, q) * (q ** (n + 1) - 1)
    return lhs == rhs


def type_of_content(mu) -> tuple[int, ...]:
    """Partial sums of the increasingly sorted content, last one dropped:
    the flag type whose permutation character has content mu."""
    parts = sorted(int(x) for x in mu)
    if any(p <= 0 for p in parts):
        raise ValueError(f"content must be positive, got {tuple(mu)}")
    out, run = [], 0
    for p in parts[:-1]:
        run += p
        out.append(run)
    return tuple(out)


# ---------------------------------------------------------------------------
# stable flags under a semisimple element, closed form


def _check_eig(eig):
    eig = [(tag, int(m)) for tag, m in eig]
    if any(m <= 0 for _t, m in eig):
        raise ValueError("eigenvalue multiplicities must be positive")
    tags = [t for t, _m in eig]
    if len(set(tags)) != len(tags):
        raise ValueError("eigenvalue tags must be distinct")
    return eig


def _increasing_dims(k: int, cap: int, budget):
    """Weakly increasing tuples d_1 <= ... <= d_k with d_j <= min(cap,
    budget_j)."""
    def rec(j, lo):
        if j == k:
            yield ()
            return
        for d in range(lo, min(cap, budget[j]) + 1):
            for rest in rec(j + 1, d):
                yield (d,) + rest
    return rec(0, 0)


def stable_flag_count(eig, a, q: int) -> int:
    """Flags of type a in F_q^N fixed by a semisimple element whose
    eigenspace multiplicities are given by eig (tags are only distinctness
    markers).  A fixed flag meets every eigenspace in a subspace chain,
    so the count is a sum over dimension assignments of Gaussian-chain
    products."""
    eig = _check_eig(eig)
    n = sum(m for _t, m in eig)
    a = _check_type(a, n)
    k = len(a)
    mults = [m for _t, m in eig]

    def rec(idx, remaining):
        if idx == len(mults):
            return 1 if all(r == 0 for r in remaining) else 0
        if any(remaining[j] > remaining[j + 1] for j in range(k - 1)):
            return 0
        total = 0
        for dims in _increasing_dims(k, mults[idx], remaining):
            sub = rec(idx + 1, tuple(r - d for r, d in zip(remaining, dims)))
            if sub:
                total += chain_count(mults[idx], dims, q) * sub
        return total

    return rec(0, a)


def stable_count_report(eig, a, q: int) -> dict:
    """Stable count together with its exact relative deviation from
    q^(-a_k * supp) F_a(N), where supp is N minus the largest eigenspace."""
    eig = _check_eig(eig)
    n = sum(m for _t, m in eig)
    a = _check_type(a, n)
    count = stable_flag_count(eig, a, q)
    supp = n - max(m for _t, m in eig)
    shift = a[-1] * supp if a else 0
    eps = Fraction(count * q ** shift, flag_count(a, n, q)) - 1
    return {
        "count": count,
        "supp": supp,
        "epsilon": eps,
        "within_half_power": abs(eps) ** 2 < Fraction(1, q ** n),
    }


# ---------------------------------------------------------------------------
# brute enumeration over actual subspaces


def enumerate_rrefs(n: int, d: int, F: Field):
    """All d x n row-reduced echelon bases over F, as tuples of rows."""
    if d == 0:
        yield ()
        return
    for pivots in combinations(range(n), d):
        free = [(i, j) for i in range(d)
                for j in range(pivots[i] + 1, n) if j not in pivots]
        units = range(F.q)
        for vals in product(units, repeat=len(free)):
            rows = [[0] * n for _ in range(d)]
            for i, p in enumerate(pivots):
                rows[i][p] = 1
            for (i, j), v in zip(free, vals):
                rows[i][j] = v
            yield tuple(tuple(r) for r in rows)


def _induced_action(r_mat, basis, F: Field):
    """Matrix of the row action v -> v R on the rowspace of an rref
    basis, or None when the rowspace is not stable."""
    n = len(r_mat)
    pivots = [next(j for j in range(n) if row[j]) for row in basis]
    out = []
    for row in basis:
        image = [0] * n
        for j in range(n):
            if row[j]:
                for c in range(n):
                    image[c] = F.add(image[c], F.mul(row[j], r_mat[j][c]))
        coeffs = [image[p] for p in pivots]
        for c in range(n):
            acc = 0
            for t, b in enumerate(basis):
                acc = F.add(acc, F.mul(coeffs[t], b[c]))
            if acc != image[c]:
                return None
        out.append(tuple(coeffs))
    return tuple(out)


def _brute_rec(r_mat, a, F: Field) -> int:
    if not a:
        return 1
    n = len(r_mat)
    total = 0
    for basis in enumerate_rrefs(n, a[-1], F):
        induced = _induced_action(r_mat, basis, F)
        if induced is not None:
            total += _brute_rec(induced, a[:-1], F)
    return total


def brute_stable_flag_count(gmat, a, q: int) -> int:
    """Stable flags under the column action of an explicit matrix,
    counted by walking every echelon basis top level first."""
    F = field(q)
    n = len(gmat)
    a = _check_type(a, n)
    r_mat = tuple(tuple(gmat[i][j] for i in range(n)) for j in range(n))
    return _brute_rec(r_mat, a, F)


def brute_flag_count(a, n: int, q: int) -> int:
    ident = tuple(tuple(1 if i == j else 0 for j in range(n))
                  for i in range(n))
    return brute_stable_flag_count(ident, a, q)


def split_semisimple_matrix(eig, q: int):
    """Diagonal matrix realizing the eigenvalue structure with actual
    distinct field elements standing in for the tags."""
    eig = _check_eig(eig)
    F = field(q)
    if len(eig) > q - 1:
        raise ValueError(
            f"GF({q}) has only {q - 1} nonzero elements for {len(eig)} tags")
    alpha = F.multiplicative_generator()
    values = []
    for t, (_tag, m) in enumerate(eig):
        values.extend([F.pow(alpha, t)] * m)
    n = len(values)
    return tuple(tuple(values[i] if i == j else 0 for j in range(n))
                 for i in range(n))


# ---------------------------------------------------------------------------
# characters at a fixed level


def level_char_value(lam, eig, q: int) -> int:
    """Value of the unipotent character labeled by lam on a semisimple
    element with the given eigenspace structure, through the inverse
    Kostka expansion into flag permutation characters.  Pass the one-
    eigenspace structure for the identity; the result is then the full
    degree."""
    lam = tuple(lam)
    eig = _check_eig(eig)
    if sum(m for _t, m in eig) != sum(lam):
        raise ValueError("eigenvalue multiplicities must sum to |lam|")
    total = 0
    for mu, c in inverse_kostka_row(lam).items():
        total += c * stable_flag_count(eig, type_of_content(mu), q)
    return total
