"""End-to-end command line behaviour, run in process."""

import json

import pytest

from charcomb.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv, "--json")
    return code, json.loads(out)


def test_symbol_rank_example(capsys):
    code, doc = run_json(capsys, "symbol", "rank", "{1|0}")
    assert code == 0
    assert doc["status"] == "ok"
    assert doc["payload"] == {"rank": 1, "defect": 0}


def test_kostka_example(capsys):
    code, doc = run_json(capsys, "young", "kostka",
                         "--lambda", "2,1", "--mu", "1,1,1")
    assert code == 0
    assert doc["payload"]["kostka"] == 2


def test_flags_alias_matches_young(capsys):
    _, a = run_json(capsys, "young", "flags", "--a", "1,2", "--N", "5",
                    "--q", "2")
    _, b = run_json(capsys, "flags", "count", "--a", "1,2", "--N", "5",
                    "--q", "2")
    assert a["payload"] == b["payload"]


def test_symbol_sim(capsys):
    code, doc = run_json(capsys, "symbol", "sim", "{0,2|1}")
    assert code == 0
    assert doc["payload"]["count"] == 8


def test_degree_eval_symbol(capsys):
    code, doc = run_json(capsys, "degree", "eval", "--kind", "C",
                         "--q", "3", "--symbol", "{0,1,2|}")
    assert code == 0
    assert doc["payload"]["degree"] == 6


def test_degree_count(capsys):
    code, doc = run_json(capsys, "degree", "count", "--kind", "A",
                         "--rank", "8", "--q", "2", "--max", "4096")
    assert code == 0
    assert doc["payload"]["count"] == 2
    assert doc["payload"]["total"] == 22


def test_weyl_char_table(capsys):
    code, doc = run_json(capsys, "weyl", "char", "--n", "2")
    assert code == 0
    assert len(doc["payload"]["symbols"]) == 5
    assert doc["payload"]["values"][4] == [1, 1, 1, 1, 1]


def test_group_build(capsys):
    code, doc = run_json(capsys, "group", "build", "--family", "SL",
                         "--n", "2", "--q", "3")
    assert code == 0
    assert doc["payload"]["order"] == 24
    assert doc["payload"]["classes"] == 7


def test_group_cancel(capsys):
    code, doc = run_json(capsys, "group", "cancel", "--p", "3", "--q", "2")
    assert code == 0
    inst = doc["payload"]["instances"]
    assert inst[0]["lhs"] == -9 and inst[0]["equal"]


def test_group_support_from_file(capsys, tmp_path):
    f = tmp_path / "m.txt"
    f.write_text("3 2\n1 1 0\n0 1 0\n0 0 1\n")
    code, doc = run_json(capsys, "group", "support", "--file", str(f))
    assert code == 0
    assert doc["payload"]["support"] == 1
    assert doc["payload"]["regular_semisimple"] is False


def test_exit_code_1_on_failed_check(capsys):
    # this tiny case honestly violates the asymptotic deviation bound
    code, doc = run_json(capsys, "young", "lowa", "--lambda", "2,2",
                         "--eig", "1:2,c:2", "--q", "2")
    assert code == 1
    assert doc["status"] == "failed"
    assert doc["payload"]["within_third_power"] is False


def test_exit_code_2_on_bad_input(capsys):
    code, doc = run_json(capsys, "symbol", "rank", "{0,0|1}")
    assert code == 2
    assert doc["status"] == "error"
    assert "duplicate" in doc["error"] or "ValueError" in doc["error"]


def test_exit_code_2_on_unknown_subcommand(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["symbol", "frobnicate", "{1|0}"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_human_mode_renders_without_json(capsys):
    code, out = run(capsys, "symbol", "rank", "{1|0}")
    assert code == 0
    assert "rank: 1" in out
    assert "status: ok" in out


def test_output_is_deterministic(capsys):
    _, a = run(capsys, "weyl", "char", "--n", "3", "--json")
    _, b = run(capsys, "weyl", "char", "--n", "3", "--json")
    da, db = json.loads(a), json.loads(b)
    assert da["payload"] == db["payload"]


def test_audit_subset(capsys):
    code, doc = run_json(capsys, "audit", "all", "--only", "3,5")
    assert code == 0
    crits = [r["criterion"] for r in doc["payload"]["criteria"]]
    assert crits == [3, 5]
    assert all(r["ok"] for r in doc["payload"]["criteria"])


def test_asai_verify_small(capsys):
    code, doc = run_json(capsys, "asai", "verify", "--max-entry", "4",
                         "--max-union", "4", "--d-max", "4")
    assert code == 0
    assert doc["payload"]["checked"] == 781
