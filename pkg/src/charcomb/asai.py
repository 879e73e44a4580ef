"""Exhaustive verification of the hook-operator / Fourier identities.

For every array X in a finite range and every 1 <= d <= d_max the verifier
checks, with exact integer arithmetic:

  (i)   Hook^0_{d,0} after R   ==  R after Hook^0_{d,0}
  (ii)  Hook^1_{d,0} after R   ==  -Theta after R after Hook^0_{d,1}

plus the sign-flipped variant of (ii), which must FAIL somewhere (the sweep
records witnesses), the four op/eps/Theta commutation identities, the parity
refinements of R, the hook inclusion lemma, and the at-most-one-(n,i)-hook
property of rank-n arrays.

Everything runs on bitmask pairs with coefficients scaled by 2*s(X) so the
hot loop only touches integers.  Work is optionally partitioned over
processes; reports merge associatively.
"""

from __future__ import annotations

import time
from typing import Iterable

from .arrays import (
    Array, arrays_with, d_of_mm, defect_mm, popcount, rank_mm, reduce_mm,
    s_exponent_mm, unordered_key_mm,
)
from .fourier import fourier_terms_mm
from .hooks import hook_expansion_mm, hooks_mm


def _add(d: dict, k, v: int) -> None:
    w = d.get(k, 0) + v
    if w:
        d[k] = w
    else:
        del d[k]


def _fourier_then_hook(m0: int, m1: int, d: int, i: int, jj: int) -> dict:
    """2*s(X) * Hook^jj_{d,i}(R(X)) as an integer-coefficient dict."""
    out: dict = {}
    for sf, _, y0, y1 in fourier_terms_mm(m0, m1):
        for sh, r0, r1 in hook_expansion_mm(y0, y1, d, i, jj):
            _add(out, (r0, r1), 2 * sf * sh)
    return out


def _hook_then_fourier(m0: int, m1: int, d: int, i: int, jj: int) -> dict:
    """2*s(X) * R(Hook^jj_{d,i}(X)), same scaling as _fourier_then_hook."""
    base = s_exponent_mm(m0, m1) + 1
    out: dict = {}
    for sh, r0, r1 in hook_expansion_mm(m0, m1, d, i, jj):
        w = 1 << (base - s_exponent_mm(r0, r1))
        for sf, _, z0, z1 in fourier_terms_mm(r0, r1):
            _add(out, (z0, z1), sf * sh * w)
    return out


def _theta_scaled(terms: dict, sign: int) -> dict:
    out = {}
    for (k0, k1), v in terms.items():
        s = -sign if (popcount(k0) + popcount(k1)) & 1 else sign
        out[(k0, k1)] = s * v
    return out


def check_asai(m0: int, m1: int, d: int) -> tuple[bool, bool, bool]:
    """(identity (i) holds, identity (ii) holds, flipped (ii) fails)."""
    lhs_i = _fourier_then_hook(m0, m1, d, 0, 0)
    rhs_i = _hook_then_fourier(m0, m1, d, 0, 0)
    ok_i = lhs_i == rhs_i

    lhs_ii = _fourier_then_hook(m0, m1, d, 0, 1)
    raw = _hook_then_fourier(m0, m1, d, 1, 0)
    ok_ii = lhs_ii == _theta_scaled(raw, -1)
    flipped_fails = lhs_ii != _theta_scaled(raw, 1)
    return ok_i, ok_ii, flipped_fails


def check_fourier_op(m0: int, m1: int, dis: tuple[tuple[int, int], ...]) -> list[str]:
    """Violated clauses of the four op/eps/Theta identities on one array."""
    bad = []
    ft = fourier_terms_mm(m0, m1)
    ft_op = fourier_terms_mm(m1, m0)

    # (i) R(X^op) == eps(R(X))
    lhs = {(y0, y1): sf for sf, _, y0, y1 in ft_op}
    rhs = {(y0, y1): (-sf if d_of_mm(y0, y1) & 1 else sf) for sf, _, y0, y1 in ft}
    if lhs != rhs:
        bad.append("fourier_op_i")

    # (ii) R(X)^op == R(eps X)
    lhs = {(y1, y0): sf for sf, _, y0, y1 in ft}
    sx = -1 if d_of_mm(m0, m1) & 1 else 1
    rhs = {(y0, y1): sx * sf for sf, _, y0, y1 in ft}
    if lhs != rhs:
        bad.append("fourier_op_ii")

    # (iii) op(Hook^j(X)) == (-1)^j Hook^j(X^op)
    for dd, ii in dis:
        for jj in (0, 1):
            lhs = {}
            for sh, r0, r1 in hook_expansion_mm(m0, m1, dd, ii, jj):
                _add(lhs, (r1, r0), sh)
            rhs = {}
            sj = -1 if jj else 1
            for sh, r0, r1 in hook_expansion_mm(m1, m0, dd, ii, jj):
                _add(rhs, (r0, r1), sj * sh)
            if lhs != rhs:
                bad.append(f"fourier_op_iii_d{dd}_i{ii}_j{jj}")

    # (iv) eps(op) == Theta(op(eps)): a parity identity of scalars
    if (d_of_mm(m1, m0) - d_of_mm(m0, m1) - defect_mm(m1, m0)) % 2:
        bad.append("fourier_op_iv")
    return bad


def check_re_op(m0: int, m1: int) -> list[str]:
    bad = []
    ft = fourier_terms_mm(m0, m1)
    ft_op = fourier_terms_mm(m1, m0)
    dx = d_of_mm(m0, m1)
    defx = defect_mm(m0, m1)

    for e in (0, 1):
        # (i) R_e(X^op) == (-1)^e R_e(X)
        lhs = {(y0, y1): sf for sf, par, y0, y1 in ft_op if par == e}
        se = -1 if e else 1
        rhs = {(y0, y1): se * sf for sf, par, y0, y1 in ft if par == e}
        if lhs != rhs:
            bad.append(f"re_op_i_e{e}")

        # (ii) R_e(X)^op == (-1)^{d(X)} R_{e+Def(X)}(X)
        lhs = {(y1, y0): sf for sf, par, y0, y1 in ft if par == e}
        sd = -1 if dx & 1 else 1
        e2 = (e + defx) & 1
        rhs = {(y0, y1): sd * sf for sf, par, y0, y1 in ft if par == e2}
        if lhs != rhs:
            bad.append(f"re_op_ii_e{e}")

        # (ii) pushed through the unordered projection:
        #   [R_e(X)] == (-1)^{d(X)} [R_{e+Def(X)}(X)].
        # When d(X) is odd and Def(X) is even this forces [R_e(X)] = 0.
        lhs_p: dict = {}
        rhs_p: dict = {}
        for sf, par, y0, y1 in ft:
            if par == e:
                _add(lhs_p, unordered_key_mm(y0, y1), sf)
            if par == e2:
                _add(rhs_p, unordered_key_mm(y0, y1), sd * sf)
        if lhs_p != rhs_p:
            bad.append(f"re_op_proj_e{e}")
        if (dx & 1) and not (defx & 1) and lhs_p:
            bad.append(f"re_op_vanish_e{e}")
    return bad


def check_hook_inclusion(m0: int, m1: int,
                         dis: tuple[tuple[int, int], ...]) -> list[str]:
    bad = []
    x_hooks = {di: hooks_mm(m0, m1, di[0], di[1]) for di in dis}
    for (e, j) in dis:
        for lam in x_hooks[(e, j)]:
            xe, rowe = lam
            y0, y1 = m0, m1
            if rowe == 0:
                y0 ^= 1 << xe
            else:
                y1 ^= 1 << xe
            if (j + rowe) & 1:
                y1 ^= 1 << (xe - e)
            else:
                y0 ^= 1 << (xe - e)
            for (d, i) in dis:
                y_hooks = set(hooks_mm(y0, y1, d, i))
                disp = (xe - (e - d), (i + j + rowe) & 1)
                for mu in x_hooks[(d, i)]:
                    if mu in y_hooks or mu == lam or mu == disp:
                        continue
                    bad.append(f"hook_inclusion_d{d}_i{i}_e{e}_j{j}")
                    break
    return bad


def check_n_hooks(m0: int, m1: int) -> list[str]:
    n = rank_mm(m0, m1)
    bad = []
    for i in (0, 1):
        if n == 0 and i == 0:
            continue
        if len(hooks_mm(m0, m1, n, i)) > 1:
            bad.append(f"n_hooks_i{i}")
    return bad


def _render(terms: dict) -> str:
    bits = []
    for (k0, k1), v in sorted(terms.items()):
        bits.append(f"{v}*{Array.from_masks(k0, k1)}")
    return " + ".join(bits) if bits else "0"


def sweep_chunk(masks: Iterable[tuple[int, int]], d_max: int,
                include_lemmas: bool) -> dict:
    """Run all checks over a chunk of arrays; returns a mergeable report."""
    dis = tuple((d, i) for d in range(0, d_max + 1)
                for i in (0, 1) if (d, i) != (0, 0))
    counts = {"asai_i": 0, "asai_ii": 0, "flipped_refuted": 0,
              "fourier_op": 0, "re_op": 0, "hook_inclusion": 0, "n_hooks": 0}
    failures: list[dict] = []
    witness = None
    checked = 0
    for m0, m1 in masks:
        checked += 1
        for d in range(1, d_max + 1):
            ok_i, ok_ii, flipped_fails = check_asai(m0, m1, d)
            counts["asai_i"] += 1
            counts["asai_ii"] += 1
            if flipped_fails:
                counts["flipped_refuted"] += 1
                if witness is None:
                    witness = {"array": str(Array.from_masks(m0, m1)), "d": d}
            if not ok_i:
                failures.append({
                    "array": str(Array.from_masks(m0, m1)), "d": d,
                    "identity": "asai_i",
                    "lhs": _render(_fourier_then_hook(m0, m1, d, 0, 0)),
                    "rhs": _render(_hook_then_fourier(m0, m1, d, 0, 0)),
                })
            if not ok_ii:
                failures.append({
                    "array": str(Array.from_masks(m0, m1)), "d": d,
                    "identity": "asai_ii",
                    "lhs": _render(_fourier_then_hook(m0, m1, d, 0, 1)),
                    "rhs": _render(_theta_scaled(
                        _hook_then_fourier(m0, m1, d, 1, 0), -1)),
                })
        if include_lemmas:
            for name, bads in (
                ("fourier_op", check_fourier_op(m0, m1, dis)),
                ("re_op", check_re_op(m0, m1)),
                ("hook_inclusion", check_hook_inclusion(m0, m1, dis)),
                ("n_hooks", check_n_hooks(m0, m1)),
            ):
                counts[name] += 1
                for b in bads:
                    failures.append({
                        "array": str(Array.from_masks(m0, m1)), "d": None,
                        "identity": b, "lhs": "", "rhs": "",
                    })
    return {"checked": checked, "counts": counts,
            "failures": failures, "witness": witness}


def _merge(a: dict, b: dict) -> dict:
    a["checked"] += b["checked"]
    for k, v in b["counts"].items():
        a["counts"][k] += v
    a["failures"].extend(b["failures"])
    if a["witness"] is None:
        a["witness"] = b["witness"]
    return a


def _chunk_worker(args):
    return sweep_chunk(*args)


def asai_verify(max_entry: int = 6, max_union: int | None = 5,
                max_rank: int | None = None, d_max: int = 6,
                include_lemmas: bool = True, threads: int = 1) -> dict:
    """Full sweep; returns the CLI-facing report."""
    if max_entry < 0 or d_max < 1:
        raise ValueError("caps must be positive")
    t0 = time.perf_counter()
    masks = [(x.m0, x.m1) for x in arrays_with(max_entry, max_union, max_rank)]

    if threads > 1 and len(masks) > 256:
        import multiprocessing as mp
        nw = min(threads, mp.cpu_count())
        chunks = [masks[i::nw] for i in range(nw)]
        with mp.Pool(nw) as pool:
            parts = pool.map(
                _chunk_worker,
                [(c, d_max, include_lemmas) for c in chunks])
        report = parts[0]
        for p in parts[1:]:
            report = _merge(report, p)
    else:
        report = sweep_chunk(masks, d_max, include_lemmas)

    report["max_entry"] = max_entry
    report["max_union"] = max_union
    report["max_rank"] = max_rank
    report["d_max"] = d_max
    report["elapsed_ms"] = int((time.perf_counter() - t0) * 1000)
    report["ok"] = (not report["failures"]
                    and report["counts"]["flipped_refuted"] > 0)
    return report
