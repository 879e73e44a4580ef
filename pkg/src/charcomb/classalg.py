"""Class algebra consequences of a character table.

Everything here consumes an explicit matrix group and its computed
table: product counts across conjugacy classes, permutation characters
on cosets and flags and their irreducible constituents, the cuspidal
part of the table, and the torus-square cancellation sum.  Character
values live in Z[zeta] as coefficient vectors, so all of it is exact;
wherever the group is small enough, a direct convolution over group
elements is available as an independent oracle.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

import numpy as np

from .combinat import hook_lengths, partitions
from .cyclo import circular_mul, embed, is_integer_constant, \
    scaled_sum_is_integer_vector
from .dixon import CharacterTable, character_table
from .flags import brute_stable_flag_count, type_of_content
from .groups import MatrixGroup, build_group, coxeter_torus_generator
from .tableaux import inverse_kostka_row, kostka


def embedded_values(table: CharacterTable):
    """Character values pushed into the common order-e coefficient ring."""
    e = table.exponent
    return [[tuple(embed(table.values[i][k], table.class_orders[k], e))
             for k in range(table.n_classes)]
            for i in range(len(table.values))]


def frobenius_count(table: CharacterTable, i: int, j: int, k: int,
                    _cache={}) -> int:
    """Number of ways a fixed element of class k factors as a product of
    an element of class i and one of class j, from the column
    orthogonality sum over characters."""
    key = id(table)
    if _cache.get("key") != key:
        _cache.clear()
        _cache["key"] = key
        _cache["emb"] = embedded_values(table)
    emb = _cache["emb"]
    e = table.exponent
    n = sum(table.class_sizes)
    kinv = table.inverse_class[k]
    pref = Fraction(table.class_sizes[i] * table.class_sizes[j], n)
    terms = []
    for t, deg in enumerate(table.degrees):
        prod = circular_mul(circular_mul(emb[t][i], emb[t][j], e),
                            emb[t][kinv], e)
        terms.append((pref / deg, prod))
    out = scaled_sum_is_integer_vector(terms, e)
    if out is None:
        raise ArithmeticError(
            f"product count ({i},{j},{k}) is not a rational integer")
    if out < 0:
        raise ArithmeticError(f"product count ({i},{j},{k}) is negative")
    return out


def convolution_counts(group: MatrixGroup, i: int, j: int) -> np.ndarray:
    """Exhaustive class-by-class histogram of products x*y over the two
    classes; entry k counts ordered pairs with x*y in class k."""
    r = len(group.classes)
    cj = group.mats[np.asarray(group.classes[j], dtype=np.int64)]
    out = np.zeros(r, dtype=np.int64)
    for idx in group.classes[i]:
        prods = group._bmm(group.mats[idx], cj)
        tgt = group.class_of[group._locate(group._pack(prods))]
        out += np.bincount(tgt, minlength=r)
    return out


def frobenius_matches_convolution(group: MatrixGroup,
                                  table: CharacterTable) -> bool:
    """Every triple (i, j, k): the character-sum count times |C_k| must
    equal the exhaustive pair count."""
    r = len(group.classes)
    for i in range(r):
        for j in range(r):
            conv = convolution_counts(group, i, j)
            for k in range(r):
                if frobenius_count(table, i, j, k) * group.class_sizes[k] \
                        != int(conv[k]):
                    return False
    return True


def thompson_coverage(group: MatrixGroup, table: CharacterTable,
                      class_index: int) -> list[bool]:
    """Which classes are hit by products of two elements of the given
    class."""
    return [frobenius_count(table, class_index, class_index, k) > 0
            for k in range(table.n_classes)]


# ---------------------------------------------------------------------------
# permutation characters


def class_histogram(group: MatrixGroup, indices) -> np.ndarray:
    r = len(group.classes)
    if len(indices) == 0:
        return np.zeros(r, dtype=np.int64)
    return np.bincount(group.class_of[np.asarray(indices, dtype=np.int64)],
                       minlength=r)


def coset_permutation_character(group: MatrixGroup, indices) -> list[int]:
    """Values of the permutation character on cosets of the subgroup
    given by its member indices: |C_g meet H| |Z_G(g)| / |H|."""
    hist = class_histogram(group, indices)
    h = len(indices)
    out = []
    for c in range(len(group.classes)):
        num = int(hist[c]) * (group.size // group.class_sizes[c])
        val, rem = divmod(num, h)
        if rem:
            raise ArithmeticError(f"coset character is not integral at {c}")
        out.append(val)
    return out


def borel_permutation_character(group: MatrixGroup) -> list[int]:
    return coset_permutation_character(group,
                                       group.upper_triangular_indices())


def constituents(table: CharacterTable, perm_values) -> dict[int, int]:
    """Multiplicities of the irreducibles in an integer-valued character
    given by its values per class, via the inner product with each row."""
    e = table.exponent
    emb = embedded_values(table)
    n = sum(table.class_sizes)
    out = {}
    for t in range(len(table.values)):
        terms = []
        for c in range(table.n_classes):
            w = table.class_sizes[c] * perm_values[c]
            if w:
                terms.append((Fraction(w, n), emb[t][table.inverse_class[c]]))
        m = scaled_sum_is_integer_vector(terms, e)
        if m is None or m < 0:
            raise ArithmeticError(f"multiplicity of row {t} is not integral")
        if m:
            out[t] = m
    return out


def borel_constituent_degrees(group: MatrixGroup,
                              table: CharacterTable) -> list[int]:
    """Sorted degrees of the distinct irreducible constituents of the
    permutation character on Borel cosets."""
    mult = constituents(table, borel_permutation_character(group))
    return sorted(table.degrees[t] for t in mult)


def flag_permutation_character(group: MatrixGroup, a) -> list[int]:
    """Fixed flags of type a per conjugacy class, counted directly."""
    return [brute_stable_flag_count(group.mat_of(rep), a, group.q)
            for rep in group.class_reps]


def unipotent_rows(group: MatrixGroup) -> dict[tuple[int, ...], list[int]]:
    """Integer value rows of the unipotent characters of a GL group,
    assembled from flag permutation characters by the inverse Kostka
    expansion, keyed by partition."""
    n = group.n
    phi = {tuple(mu): flag_permutation_character(group, type_of_content(mu))
           for mu in partitions(n)}
    out = {}
    for lam in partitions(n):
        row = [0] * len(group.classes)
        for mu, c in inverse_kostka_row(lam).items():
            for t, v in enumerate(phi[mu]):
                row[t] += c * v
        out[tuple(lam)] = row
    return out


def flag_rows_round_trip(group: MatrixGroup) -> bool:
    """Each flag permutation character must equal the Kostka-weighted sum
    of the unipotent rows it decomposes into."""
    n = group.n
    chi = unipotent_rows(group)
    for mu in partitions(n):
        phi = flag_permutation_character(group, type_of_content(mu))
        got = [0] * len(group.classes)
        for lam in partitions(n):
            k = kostka(lam, mu)
            if k:
                for t, v in enumerate(chi[lam]):
                    got[t] += k * v
        if got != list(phi):
            return False
    return True


def match_table_row(table: CharacterTable, row) -> int | None:
    """Index of the table row equal to the given integer-valued row, or
    None; safe in tables that also hold irrational rows."""
    for t in range(len(table.values)):
        if all(is_integer_constant(table.values[t][k], table.class_orders[k],
                                   row[k])
               for k in range(table.n_classes)):
            return t
    return None


def syt_count(lam) -> int:
    hooks = [h for row in hook_lengths(tuple(lam)) for h in row]
    out = factorial(sum(lam))
    for h in hooks:
        out, rem = divmod(out, h)
        assert rem == 0
    return out


# ---------------------------------------------------------------------------
# cuspidal characters and the torus cancellation


def parabolic_radical_class_histograms(group: MatrixGroup):
    """Class histograms of the unipotent radicals of the maximal standard
    parabolics (one per way of cutting the dimension in two)."""
    out = []
    for cut in range(1, group.n):
        idx = group.parabolic_radical_indices((cut, group.n - cut))
        out.append(class_histogram(group, idx))
    return out


def cuspidal_set(group: MatrixGroup, table: CharacterTable) -> list[int]:
    """Rows whose value sum over every maximal parabolic radical
    vanishes; killing these radicals already kills the full unipotent
    radical of the Borel, so this is the usual support condition."""
    e = table.exponent
    emb = embedded_values(table)
    hists = parabolic_radical_class_histograms(group)
    out = []
    for t in range(len(table.values)):
        good = True
        for hist in hists:
            acc = [0] * e
            for c, w in enumerate(hist):
                if w:
                    vec = emb[t][c]
                    for s in range(e):
                        acc[s] += int(w) * vec[s]
            if not is_integer_constant(acc, e, 0):
                good = False
                break
        if good:
            out.append(t)
    return out


def block_upper_indices(group: MatrixGroup, blocks) -> np.ndarray:
    """Members of the standard parabolic with the given diagonal block
    sizes: anything on or above the blocks, zero below."""
    if sum(blocks) != group.n:
        raise ValueError("block sizes must sum to the dimension")
    starts = [0]
    for b in blocks:
        starts.append(starts[-1] + b)
    inside = np.zeros((group.n, group.n), dtype=bool)
    for s, t in zip(starts, starts[1:]):
        inside[s:t, s:t] = True
    below = np.tril(np.ones((group.n, group.n), dtype=bool), -1) & ~inside
    mask = ~np.any(group.mats[:, below], axis=1)
    return np.nonzero(mask)[0]


def class_meets_indices(group: MatrixGroup, class_index: int,
                        indices) -> bool:
    hist = class_histogram(group, indices)
    return bool(hist[class_index])


def cancel_verify(p: int, q: int) -> dict:
    """The cuspidal cancellation sum in GL_p(q): over cuspidal rows,
    sum chi(t)^2 chi(z) for the norm-one torus generator t and each
    central scalar z of order dividing p; every z must give p (1 - q)
    times the cuspidal degree prod (q^i - 1), i < p."""
    group = build_group("GL", p, q)
    table = character_table(group)
    e = table.exponent
    emb = embedded_values(table)
    t_class = group.class_of_element(group.key_of(
        coxeter_torus_generator(p, q)))
    cusp = cuspidal_set(group, table)
    centre = [group.class_of_element(z) for z in group.center_keys()
              if group.order_of(z) in (1, p)]
    expected = p * (1 - q)
    for i in range(1, p):
        expected *= q ** i - 1
    values = []
    for zc in sorted(centre):
        acc = [0] * e
        for t in cusp:
            sq = circular_mul(emb[t][t_class], emb[t][t_class], e)
            prod = circular_mul(sq, emb[t][zc], e)
            for s in range(e):
                acc[s] += prod[s]
        red = scaled_sum_is_integer_vector([(Fraction(1), acc)], e)
        if red is None:
            raise ArithmeticError("cancellation sum is not a rational integer")
        values.append(red)
    return {
        "p": p,
        "q": q,
        "torus_class": t_class,
        "cuspidal": cusp,
        "center_classes": sorted(centre),
        "values": values,
        "expected": expected,
        "ok": all(v == expected for v in values),
    }
