import json
from fractions import Fraction

import pytest

from asmkit import cli
from asmkit import kuperberg as K


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def report(capsys, *argv):
    code, out, err = run(capsys, *argv)
    return code, json.loads(out)


def strip_meta(text):
    d = json.loads(text)
    d.pop("meta")
    return json.dumps(d, sort_keys=True)


def test_census_asm(capsys):
    code, rep = report(capsys, "census", "--class", "ASM", "--max-order", "5")
    assert code == 0 and rep["ok"]
    assert [r["count"] for r in rep["results"]] == ["1", "2", "7", "42", "429"]
    assert all(r["equal"] for r in rep["results"])
    assert set(rep["meta"]) == {"timestamp", "elapsed_ms", "jobs", "backend"}
    assert "jobs" not in rep["inputs"]


def test_census_vs5(capsys):
    code, rep = report(capsys, "census", "--class", "VS", "--order", "5")
    r = rep["results"][0]
    assert code == 0 and r["count"] == "3" and r["formula"] == "3" and r["equal"]


def test_census_rejects_vos13(capsys):
    code, out, err = run(capsys, "census", "--class", "VOS", "--order", "13")
    assert code == 2 and "8n+5" in err and out == ""


def test_census_over_limit(capsys):
    code, _, err = run(capsys, "census", "--class", "DS", "--order", "20")
    assert code == 2 and "bound 8" in err


def test_census_failure_exit_code(capsys, monkeypatch):
    monkeypatch.setattr(K, "class_count_formula", lambda tag, order: Fraction(-1))
    code, rep = report(capsys, "census", "--class", "ASM", "--max-order", "3")
    assert code == 1 and not rep["ok"]


def test_census_conjectural_rows_do_not_fail(capsys, monkeypatch):
    real = K.conjectured_count
    monkeypatch.setattr(K, "conjectured_count", lambda tag, order: real(tag, order) + 1)
    code, rep = report(capsys, "census", "--class", "HTS", "--max-order", "3")
    odd = [r for r in rep["results"] if r["order"] % 2]
    assert odd and all(r.get("conjecture") for r in odd)
    assert code == 0


def test_tsv(capsys):
    code, out, _ = run(capsys, "census", "--class", "ASM", "--max-order", "3", "--format", "tsv")
    lines = out.strip().split("\n")
    assert code == 0 and len(lines) == 4
    header = lines[0].split("\t")
    assert "count" in header and "formula" in header
    assert lines[3].split("\t")[header.index("count")] == "7"


def test_out_file(tmp_path, capsys):
    path = tmp_path / "r.json"
    code, out, _ = run(capsys, "genfun", "--class", "ASM", "--order", "4", "--out", str(path))
    assert code == 0 and out == ""
    rep = json.loads(path.read_text())
    assert rep["results"][0]["values"]["2"] == "64"
    assert rep["results"][0]["values"]["1"] == "42"


def test_enumerate(capsys):
    code, rep = report(capsys, "enumerate", "--class", "QTS", "--order", "4")
    assert code == 0 and len(rep["results"]) == 2
    code, _, _ = run(capsys, "enumerate", "--order", "4")
    assert code == 2


def test_dim_forms(capsys):
    code, rep = report(capsys, "dim", "--group", "sp", "--rank", "4", "--weight", "1,1")
    r = rep["results"][0]
    assert code == 0 and r["dim"] == "27" and r["rank"] == 4 and r["group"] == "Sp_8"
    code, rep = report(capsys, "dim", "--group", "PinEven4", "--weight", "3/2,1/2")
    assert rep["results"][0]["dim"] == "12"
    code, rep = report(capsys, "dim", "--group", "GL6", "--weight", "delta(2,2)")
    assert rep["results"][0]["dim"] == "189"
    assert run(capsys, "dim", "--group", "gl", "--weight", "1")[0] == 2
    assert run(capsys, "dim", "--group", "Sp5", "--weight", "1")[0] == 2
    assert run(capsys, "dim", "--group", "GL2", "--weight", "1/2")[0] == 2


def test_verify_identities(capsys):
    code, rep = report(capsys, "verify", "identities", "--id", "D3", "--max-size", "2", "--seeds", "2")
    assert code == 0 and len(rep["results"]) == 4
    assert all(r["equal"] and r["lhs"] == r["rhs"] for r in rep["results"])
    assert run(capsys, "verify", "identities", "--id", "Q7")[0] == 2


def test_verify_partition_and_tables(capsys):
    code, rep = report(capsys, "verify", "partition", "--case", "OD", "--n", "1", "--seeds", "1")
    assert code == 0 and rep["results"]
    code, rep = report(capsys, "verify", "tables", "--table", "T4", "--seeds", "1")
    assert code == 0 and len(rep["results"]) == 3
    code, rep = report(capsys, "verify", "tables", "--row", "A(n;x,y;ζ4)", "--table", "T1", "--seeds", "1")
    assert code == 0 and len(rep["results"]) == 1
    assert run(capsys, "verify", "partition", "--case", "NOPE")[0] == 2


def test_conjecture(capsys):
    code, rep = report(capsys, "conjecture", "--max-order", "5")
    assert code == 0
    by = {r["order"]: r for r in rep["results"]}
    assert by[3]["hts"]["brute"] == "3" and by[3]["hts"]["agree"]
    assert all(r["conjecture"] for r in rep["results"])
    assert run(capsys, "conjecture", "--order", "4")[0] == 2
    assert run(capsys, "conjecture", "--order", "9")[0] == 2


def test_usage_errors(capsys):
    assert run(capsys)[0] == 2
    assert run(capsys, "census", "--class", "FOO")[0] == 2
    assert run(capsys, "census", "--seeds", "0")[0] == 2


def test_jobs_env_and_determinism(capsys, monkeypatch):
    outs = []
    for jobs in ("1", "3"):
        monkeypatch.setenv("ASMKIT_JOBS", jobs)
        code, out, _ = run(capsys, "census", "--class", "VS,HTS", "--max-order", "6")
        assert code == 0
        assert json.loads(out)["meta"]["jobs"] == int(jobs)
        outs.append(strip_meta(out))
    assert outs[0] == outs[1]
