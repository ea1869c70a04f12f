import json

import pytest

from pendant_trees.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compute_values(capsys):
    for spec, want in (("petersen", 1), ("grid:3,4", 0), ("complete:8", 5)):
        code, out, _ = run(capsys, "compute", "--graph", spec, "--k", "3")
        assert code == 0 and json.loads(out)["value"] == want


def test_compute_csv_and_dot(capsys):
    code, out, _ = run(capsys, "compute", "--graph", "wheel:5", "--format", "csv")
    assert code == 0 and out.startswith("graph,k,value,exact,witness\nW5,3,1,true,")
    code, out, _ = run(capsys, "compute", "--graph", "wheel:5", "--format", "dot")
    assert code == 0 and out.startswith('graph "W5"')


def test_budget_limited_exit_code(capsys):
    code, out, _ = run(capsys, "compute", "--graph", "torus:4,4", "--budget", "2")
    assert code == 2 and json.loads(out)["exact"] is False


def test_parse_failure(capsys):
    code, _, err = run(capsys, "compute", "--graph", "cycle:2")
    assert code == 1 and "error" in err


def test_construct_and_verify_roundtrip(capsys, tmp_path):
    out = tmp_path / "t.json"
    code, _, err = run(capsys, "construct", "--g", "complete:5", "--h", "complete:5",
                       "--s", "(0,0),(1,1),(2,2)", "--out", str(out), "--dot", str(tmp_path / "t.dot"))
    assert code == 0 and "3 trees" in err or "trees" in err
    data = json.loads(out.read_text())
    assert data["size"] >= 3 and data["verified"]
    assert (tmp_path / "t.dot").read_text().startswith("graph")
    code, vout, _ = run(capsys, "verify", "--g", "complete:5", "--h", "complete:5", "--packing", str(out))
    assert code == 0 and json.loads(vout)["ok"] is True


def test_construct_same_copy_and_path(capsys):
    code, out, _ = run(capsys, "construct", "--g", "complete:5", "--h", "complete:5", "--s", "(0,0),(0,1),(0,2)")
    data = json.loads(out)
    assert code == 0 and data["case"] == "same-copy" and data["size"] >= 2 + 2 + 2
    code, out, _ = run(capsys, "construct", "--g", "path:4", "--h", "wheel:5", "--s", "(0,1),(2,2),(3,4)")
    assert code == 0 and json.loads(out)["size"] >= 1


def test_construct_is_byte_identical(capsys):
    args = ("construct", "--g", "complete:4", "--h", "wheel:5", "--seed", "7")
    a = run(capsys, *args)[1]
    b = run(capsys, *args)[1]
    assert a == b


def test_construct_bad_terminals(capsys):
    code, _, err = run(capsys, "construct", "--g", "complete:4", "--h", "complete:4", "--s", "(0,0),(9,9),(1,1)")
    assert code == 1
    code, _, _ = run(capsys, "construct", "--g", "complete:4", "--h", "complete:4", "--s", "zzz")
    assert code == 1


def test_verify_failures(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"terminals": ["0", "1", "2"], "trees": [
        {"edges": [["0", "3"], ["1", "3"], ["3", "2"], ["2", "4"]], "root": None}]}))
    code, out, _ = run(capsys, "verify", "--graph", "complete:5", "--packing", str(bad))
    assert code == 1 and "degree 2" in json.loads(out)["violation"]
    code, out, _ = run(capsys, "verify", "--graph", "path:3", "--packing", str(bad))
    assert code == 1 and "not in host" in json.loads(out)["violation"]
    junk = tmp_path / "junk.json"
    junk.write_text("{not json")
    code, _, _ = run(capsys, "verify", "--graph", "complete:5", "--packing", str(junk))
    assert code == 1


def test_probe(capsys):
    code, out, _ = run(capsys, "probe", "--g", "path:3", "--h", "path:3")
    data = json.loads(out)
    assert code == 0 and data["tight"] and data["bound"] == 0


def test_table(capsys):
    code, out, _ = run(capsys, "table", "--section", "clique", "--max-vertices", "12")
    lines = out.strip().splitlines()
    assert code == 0 and lines[0] == "network,k,claimed,computed,match"
    assert "HP3,3,1,1,yes" in lines
    assert any(l.startswith("HP4,3,2,,skipped") for l in lines)
