from __future__ import annotations

import json

import pytest

from edgeideal.cli import run


def out_of(capsys, *argv) -> tuple[int, str, str]:
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_construct_formats(capsys):
    code, out, _ = out_of(capsys, "construct", "cycle:4")
    assert code == 0 and out.splitlines()[0] == "4 4"
    code, out, _ = out_of(capsys, "construct", "cycle:4", "--format", "json")
    assert json.loads(out)["n"] == 4


def test_betti_table_and_csv(capsys):
    code, out, _ = out_of(capsys, "betti", "--graph", "cycle:5")
    assert code == 0 and "total: 1 5 5 1" in out
    _, out, _ = out_of(capsys, "betti", "--graph", "cycle:5", "--format", "csv")
    assert out.splitlines() == ["i,j,b", "0,0,1", "1,2,5", "2,3,5", "3,5,1"]


def test_betti_json_and_fold_switch(capsys):
    _, a, _ = out_of(capsys, "betti", "--graph", "cycle:6", "--format", "json")
    _, b, _ = out_of(capsys, "betti", "--graph", "cycle:6", "--format", "json", "--no-fold", "--field", "Q")
    assert json.loads(a)["table"]["entries"] == json.loads(b)["table"]["entries"]
    assert json.loads(b)["table"]["field"] == "Q"


def test_betti_on_projective_plane_depends_on_field(capsys):
    _, gf2, _ = out_of(capsys, "betti", "--complex", "rp2", "--format", "csv")
    _, q, _ = out_of(capsys, "betti", "--complex", "rp2", "--format", "csv", "--field", "Q")
    assert gf2 != q


def test_genfun(capsys):
    code, out, _ = out_of(capsys, "genfun", "--graph", "path:4")
    assert code == 0 and out.strip() == "1 + 3*x*y + 2*x*y^2"
    _, out, _ = out_of(capsys, "genfun", "--graph", "path:4", "--method", "forest")
    assert out.strip() == "1 + 3*x*y + 2*x*y^2"


def test_classify(capsys):
    code, out, _ = out_of(capsys, "classify", "--graph", "cycle:5")
    report = json.loads(out)
    assert code == 0 and report["vertex_decomposable"]["value"] and report["violations"] == []
    _, out, _ = out_of(capsys, "classify", "--graph", "cycle:4", "--checks", "vd,cm")
    report = json.loads(out)
    assert report["cm"] == {"GF(2)": False} and report["shellable"]["value"] is None


def test_bounds(capsys):
    _, out, _ = out_of(capsys, "bounds", "--kind", "max_degree", "--n", "4", "--d", "2")
    assert json.loads(out)["bound"] == "13/4"
    _, out, _ = out_of(capsys, "bounds", "--kind", "general", "--n", "6", "--a", "1/4", "--b=-5/4")
    assert json.loads(out)["bound"] == "19/4"
    _, out, _ = out_of(capsys, "bounds", "--kind", "max_degree", "--graph", "cycle:4")
    report = json.loads(out)
    assert report["pdim"] == 3 and report["holds"]


def test_homology(capsys):
    _, out, _ = out_of(capsys, "homology", "--complex", "rp2", "--field", "2,Q", "--torsion-primes", "2,3")
    result = json.loads(out)
    assert result["reduced_homology"] == {"GF(2)": {"1": 1, "2": 1}, "Q": {}}
    assert result["agrees_with_Q"] is False


def test_verify_single_check(capsys):
    code, out, _ = out_of(capsys, "verify", "ferrers", "--max-cells", "5")
    assert code == 0 and out.splitlines()[-1] == "OK: 0 mismatches"


@pytest.mark.parametrize("argv", [
    ["betti", "--graph", "nonsense:3"],
    ["betti"],
    ["genfun"],
    ["bounds", "--kind", "claw_free", "--graph", "kbipartite:1,3"],
    ["bounds", "--kind", "general", "--n", "4", "--a", "x", "--b", "0"],
    ["classify", "--graph", "cycle:4", "--checks", "bogus"],
    ["homology", "--complex", "missing.json"],
])
def test_bad_input_exits_2(capsys, argv):
    code, out, err = out_of(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_cap_refusal_exits_3(capsys):
    code, _, err = out_of(capsys, "betti", "--graph", "empty:30")
    assert code == 3 and err.startswith("refused:")

def test_classify_reports_refused_shellability_as_unknown(capsys):
    code, out, _ = out_of(capsys, "classify", "--graph", "complete:14", "--checks", "shellable", "--shell-cap", "3")
    assert code == 0 and json.loads(out)["shellable"]["value"] is None


def test_failed_verify_exits_1(capsys, monkeypatch):
    from edgeideal import acceptance

    def broken():
        res = acceptance.CheckResult(0, "broken")
        res.checked = 1
        res.fail("planted")
        return res

    monkeypatch.setitem(acceptance.CHECKS, "ferrers", broken)
    code, out, _ = out_of(capsys, "verify", "ferrers")
    assert code == 1 and out.splitlines()[-1] == "FAIL: 1 mismatches"
