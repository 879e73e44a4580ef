"""The thirteen acceptance checks, one test each.

Every test prints a single `criterion N: PASS/FAIL` line so the full
gate can be read off a plain pytest run.  The two checks with explicit
wall-clock budgets assert them; group and table construction is cached
across criteria inside the audits module, so the whole file stays far
under its overall budget.
"""

import os
import time

import pytest

from charcomb import audits

THREADS = min(8, os.cpu_count() or 1)


def _run(fn, budget=None):
    t0 = time.perf_counter()
    res = fn(threads=THREADS)
    dt = time.perf_counter() - t0
    line = f"criterion {res['criterion']}: {'PASS' if res['ok'] else 'FAIL'}"
    print(line, f"({dt:.1f}s)")
    assert res["ok"], res
    if budget is not None:
        assert dt <= budget, f"criterion {res['criterion']} took {dt:.1f}s"
    return res


def test_criterion_01_identity_sweep():
    res = _run(audits.criterion_1, budget=60.0)
    assert res["counts"]["asai_i"] >= 5 * 10 ** 4
    assert res["counts"]["flipped_refuted"] >= 1


def test_criterion_02_lemma_sweep():
    res = _run(audits.criterion_2)
    assert res["counts"]["fourier_op"] >= 1


def test_criterion_03_orthogonality():
    _run(audits.criterion_3)


def test_criterion_04_phi_routes():
    _run(audits.criterion_4)


def test_criterion_05_bound_audits():
    _run(audits.criterion_5)


def test_criterion_06_degree_formulas():
    _run(audits.criterion_6)


def test_criterion_07_kostka_and_flags():
    _run(audits.criterion_7)


def test_criterion_08_stable_deviation():
    _run(audits.criterion_8, budget=30.0)


def test_criterion_09_value_deviation():
    _run(audits.criterion_9)


def test_criterion_10_character_tables():
    res = _run(audits.criterion_10)
    assert len(res["tables"]) == 14


def test_criterion_11_structure_constants():
    _run(audits.criterion_11)


def test_criterion_12_cancellation():
    _run(audits.criterion_12)


def test_criterion_13_coverage_truths():
    _run(audits.criterion_13)


@pytest.fixture(scope="module", autouse=True)
def overall_budget():
    t0 = time.perf_counter()
    yield
    total = time.perf_counter() - t0
    print(f"acceptance total: {total:.1f}s")
    assert total <= 600.0
