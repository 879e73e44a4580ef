import csv
import os

from charcomb.report import (approx_complex, audit_report, degree_report,
                             group_table_report, weyl_table_report)


def test_approx_complex_rendering():
    assert approx_complex((3,), 1) == "3"
    assert approx_complex((0, 1, 0, 1), 4) == "0"      # i + i^3
    assert approx_complex((1, 1, 1), 3) == "0"
    out = approx_complex((0, 1), 2)                    # value -1
    assert out == "-1"


def test_audit_report_files(tmp_path):
    result = {"ok": True, "elapsed": 1.0, "criteria": [
        {"criterion": 1, "ok": True, "elapsed": 0.5},
        {"criterion": 2, "ok": False, "elapsed": 0.5},
    ]}
    files = audit_report(str(tmp_path), result)
    assert sorted(os.path.basename(f) for f in files) == [
        "criteria.csv", "criteria.png"]
    with open(tmp_path / "criteria.csv") as fh:
        rows = list(csv.reader(fh))
    assert rows[0] == ["criterion", "status", "elapsed_s"]
    assert rows[1][1] == "pass" and rows[2][1] == "fail"


def test_degree_report_files(tmp_path):
    entries = [{"label": "a", "degree": 1}, {"label": "b", "degree": 15}]
    files = degree_report(str(tmp_path), entries, "odd", 2, 3)
    assert all(os.path.exists(f) for f in files)


def test_weyl_report_files(tmp_path):
    from charcomb.weylchars import rho_table
    syms, classes, values = rho_table(2)
    files = weyl_table_report(str(tmp_path), syms, classes, values)
    assert all(os.path.exists(f) for f in files)
    with open(tmp_path / "table.csv") as fh:
        rows = list(csv.reader(fh))
    assert len(rows) == 6  # header + 5 characters


def test_group_report_files(tmp_path):
    from charcomb.dixon import character_table
    from charcomb.groups import build_group
    tab = character_table(build_group("GL", 2, 2))
    files = group_table_report(str(tmp_path), "GL2(2)", tab)
    assert all(os.path.exists(f) for f in files)
