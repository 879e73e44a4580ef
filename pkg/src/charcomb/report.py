"""Delimited output plus rendered figures for CLI report directories.

Each writer drops a small CSV next to a PNG so a run leaves both a
machine-readable record and something a person can glance at.  The
figures are deliberately plain; matplotlib is imported lazily so plain
CLI calls never pay for it.
"""

from __future__ import annotations

import cmath
import csv
import os


def _ensure(outdir: str) -> str:
    os.makedirs(outdir, exist_ok=True)
    return outdir


def write_csv(path: str, header, rows) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(header)
        for row in rows:
            w.writerow(row)


def _pyplot():
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    return plt


def approx_complex(vec, order: int) -> str:
    """Decimal rendering of a coefficient vector over the order-th roots
    of unity."""
    z = sum(int(c) * cmath.exp(2j * cmath.pi * t / order)
            for t, c in enumerate(vec))
    re = 0.0 if abs(z.real) < 1e-9 else z.real
    im = 0.0 if abs(z.imag) < 1e-9 else z.imag
    if im == 0.0:
        return f"{re:.6g}"
    return f"{re:.6g}{im:+.6g}i"


def audit_report(outdir: str, result: dict) -> list[str]:
    out = _ensure(outdir)
    rows = [(r["criterion"], "pass" if r["ok"] else "fail", r["elapsed"])
            for r in result["criteria"]]
    csv_path = os.path.join(out, "criteria.csv")
    write_csv(csv_path, ("criterion", "status", "elapsed_s"), rows)

    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(8, 4))
    nums = [r[0] for r in rows]
    times = [r[2] for r in rows]
    colors = ["#2a7d2a" if r[1] == "pass" else "#b03030" for r in rows]
    ax.bar([str(n) for n in nums], times, color=colors)
    ax.set_xlabel("criterion")
    ax.set_ylabel("seconds")
    status = "all pass" if result["ok"] else "FAILURES PRESENT"
    ax.set_title(f"acceptance run: {status}, {result['elapsed']}s total")
    fig.tight_layout()
    png_path = os.path.join(out, "criteria.png")
    fig.savefig(png_path, dpi=120)
    plt.close(fig)
    return [csv_path, png_path]


def degree_report(outdir: str, entries: list[dict], kind: str, rank: int,
                  q: int) -> list[str]:
    out = _ensure(outdir)
    csv_path = os.path.join(out, "degrees.csv")
    write_csv(csv_path, ("label", "degree"),
              [(e["label"], e["degree"]) for e in entries])

    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(8, 4))
    vals = sorted(float(e["degree"]) for e in entries)
    ax.plot(range(len(vals)), vals, marker="o", linestyle="")
    if vals and vals[-1] > 0:
        ax.set_yscale("symlog")
    ax.set_xlabel("character (sorted by degree)")
    ax.set_ylabel("degree")
    ax.set_title(f"kind {kind}, rank {rank}, q = {q}")
    fig.tight_layout()
    png_path = os.path.join(out, "degrees.png")
    fig.savefig(png_path, dpi=120)
    plt.close(fig)
    return [csv_path, png_path]


def weyl_table_report(outdir: str, symbols, classes, values) -> list[str]:
    out = _ensure(outdir)
    csv_path = os.path.join(out, "table.csv")
    header = ["symbol"] + [" ".join(map(str, t)) or "e" for t in classes]
    write_csv(csv_path, header,
              [[str(s)] + list(row) for s, row in zip(symbols, values)])

    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(7, 6))
    im = ax.imshow(values, cmap="RdBu", aspect="auto")
    fig.colorbar(im, ax=ax, label="character value")
    ax.set_xlabel("class")
    ax.set_ylabel("character")
    ax.set_title(f"{len(symbols)} characters, {len(classes)} classes")
    fig.tight_layout()
    png_path = os.path.join(out, "table.png")
    fig.savefig(png_path, dpi=120)
    plt.close(fig)
    return [csv_path, png_path]


def group_table_report(outdir: str, name: str, table) -> list[str]:
    out = _ensure(outdir)
    csv_path = os.path.join(out, "table.csv")
    header = ["degree"] + [f"class{k}(size {s})"
                           for k, s in enumerate(table.class_sizes)]
    rows = []
    for i, degree in enumerate(table.degrees):
        rows.append([degree] + [
            approx_complex(table.values[i][k], table.class_orders[k])
            for k in range(table.n_classes)])
    write_csv(csv_path, header, rows)

    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(7, 4))
    degs = sorted(table.degrees)
    ax.bar(range(len(degs)), degs, color="#33557f")
    ax.set_xlabel("character (sorted)")
    ax.set_ylabel("degree")
    ax.set_title(f"{name}: degree profile")
    fig.tight_layout()
    png_path = os.path.join(out, "degrees.png")
    fig.savefig(png_path, dpi=120)
    plt.close(fig)
    return [csv_path, png_path]
