import json

import pytest

from dpdom import formulas
from dpdom.cli import main
from dpdom.values import INF


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


T11 = "product(cycle:11,cycle:11)"


def test_compute_examples(capsys):
    code, out, _ = run(capsys, "compute", "--graph", "cycle:22", "--d", "5", "--p", "5")
    assert code == 0 and out.splitlines()[0] == "2"
    code, out, _ = run(capsys, "compute", "--graph", T11, "--d", "2", "--p", "2")
    assert code == 0 and out.splitlines()[0] == "7"
    code, out, _ = run(capsys, "compute", "--graph", "path:1", "--d", "0", "--p", "0")
    assert code == 0 and out.splitlines()[0] == "1"


def test_compute_infinite_and_json(capsys, tmp_path):
    out_json = tmp_path / "r.json"
    code, out, _ = run(capsys, "compute", "--graph", "product(cycle:6,cycle:6)", "--d", "2", "--p", "3",
                       "--stage", "solver", "--json", str(out_json))
    assert code == 0 and out.splitlines()[0] == "inf"
    data = json.loads(out_json.read_text())
    assert data["value"] == "infinite" and data["stage"] == "solver"


def test_compute_budget_exit(capsys):
    code, out, _ = run(capsys, "compute", "--graph", "product(cycle:16,cycle:16)", "--d", "3", "--p", "3",
                       "--budget", "100")
    assert code == 5 and "budget exhausted" in out


def test_parse_errors(capsys):
    code, _, err = run(capsys, "compute", "--graph", "cycle:x", "--d", "1", "--p", "1")
    assert code == 2 and "bad graph spec" in err
    with pytest.raises(SystemExit) as exc:
        main(["compute", "--graph", "cycle:5", "--d", "-1", "--p", "0"])
    assert exc.value.code == 2


def test_edge_list_file_error(capsys, tmp_path):
    f = tmp_path / "g.txt"
    f.write_text("3\n0 1\n1 1\n")
    code, _, err = run(capsys, "bounds", "--graph", f"file:{f}", "--d", "1", "--p", "1")
    assert code == 2 and "line 3" in err and "self-loop" in err


def test_formula(capsys):
    code, out, _ = run(capsys, "formula", "--graph", "cycle:6", "--d", "2", "--p", "3")
    assert code == 0 and out.strip() == "inf"
    code, _, err = run(capsys, "formula", "--graph", "product(path:9,path:9)", "--d", "2", "--p", "5")
    assert code == 3 and "p <= 2d" in err
    code, _, _ = run(capsys, "formula", "--graph", T11, "--d", "2", "--p", "2")
    assert code == 3


def test_bounds_cmd(capsys, tmp_path):
    out_json = tmp_path / "b.json"
    code, out, _ = run(capsys, "bounds", "--graph", "product(cycle:16,cycle:16)", "--d", "3", "--p", "3",
                       "--json", str(out_json))
    assert code == 0 and out.splitlines()[0] == "7 <= value <= 8"
    assert json.loads(out_json.read_text())["upper"] == 8


def test_construct_and_verify(capsys, tmp_path):
    x = tmp_path / "x.txt"
    code, _, _ = run(capsys, "construct", "x_t", "--t", "0", "--out", str(x))
    assert code == 0
    lines = x.read_text().splitlines()
    assert lines[0].startswith("# ") and len(lines) == 8
    code, out, _ = run(capsys, "verify", "--graph", T11, "--d", "2", "--p", "2", "--set", str(x))
    assert code == 0 and "packing: true" in out and "dominating: true" in out

    x6 = tmp_path / "x6.txt"
    x6.write_text("\n".join(lines[:-1]) + "\n")
    code, out, _ = run(capsys, "verify", "--graph", T11, "--d", "2", "--p", "2", "--set", str(x6))
    assert code == 1 and "dominating: false" in out and "undominated:" in out


def test_verify_packing_violation(capsys, tmp_path):
    s = tmp_path / "s.txt"
    s.write_text("0 0\n1 1\n")
    code, out, _ = run(capsys, "verify", "--graph", T11, "--d", "2", "--p", "2", "--set", str(s))
    assert code == 1 and "packing: false" in out and "too close: 0 12" in out


def test_verify_bad_set(capsys, tmp_path):
    s = tmp_path / "s.txt"
    s.write_text("0 0\n99 1\n")
    code, _, err = run(capsys, "verify", "--graph", T11, "--d", "2", "--p", "2", "--set", str(s))
    assert code == 2 and "line 2" in err


def test_construct_variants(capsys):
    code, out, _ = run(capsys, "construct", "torus_minus_one", "--m", "16", "--n", "16", "--d", "3", "--p", "3")
    assert code == 0 and len(out.splitlines()) == 9
    code, _, err = run(capsys, "construct", "x_t", "--t", "1")
    assert code == 3 and "t=1" in err
    code, _, err = run(capsys, "construct", "torus_minus_one", "--m", "14", "--n", "16", "--d", "3")
    assert code == 3 and "mod" in err
    code, out, _ = run(capsys, "construct", "family55", "--k", "1")
    assert code == 0 and len(out.splitlines()) == 41
    code, out, _ = run(capsys, "construct", "glued", "--k", "2", "--d", "2")
    assert code == 0 and len(out.splitlines()) == 14
    code, _, err = run(capsys, "construct", "family55")
    assert code == 2 and "--k" in err


def test_construct_product(capsys, tmp_path):
    a = tmp_path / "a.txt"
    a.write_text("0\n4\n7\n")
    out = tmp_path / "p.txt"
    code, _, _ = run(capsys, "construct", "product", "--left", "cycle:11", "--right", "cycle:11",
                     "--left-set", str(a), "--right-set", str(a), "--d", "2", "--p", "2", "--out", str(out))
    assert code == 0 and len(out.read_text().splitlines()) == 10
    code, _, _ = run(capsys, "verify", "--graph", T11, "--d", "2", "--p", "2", "--set", str(out))
    assert code == 0
    bad = tmp_path / "b.txt"
    bad.write_text("0\n1\n")
    code, _, _ = run(capsys, "construct", "product", "--left", "cycle:11", "--right", "cycle:11",
                     "--left-set", str(bad), "--right-set", str(a), "--d", "2", "--p", "2")
    assert code == 3


def test_reproduce_skip_slow(capsys, tmp_path):
    out_json = tmp_path / "r.json"
    code, out, _ = run(capsys, "reproduce", "--skip-slow", "--json", str(out_json))
    assert code == 0
    data = json.loads(out_json.read_text())
    statuses = {c["claim"]: c["status"] for c in data["claims"]}
    assert statuses["flagship-c11xc11-d2p2"] == "budget"
    assert "mismatch" not in statuses.values()


def test_reproduce_tampered_formula(capsys, monkeypatch):
    real = formulas.formula_cycle

    def tampered(n, params):
        v = real(n, params)
        return v + 1 if v is not INF and n == 22 else v

    monkeypatch.setattr(formulas, "formula_cycle", tampered)
    code, out, _ = run(capsys, "reproduce", "--skip-slow")
    assert code == 4
    assert any(line.startswith("mismatch") and "cycle-c22" in line for line in out.splitlines())


@pytest.mark.slow
def test_reproduce_full(capsys, tmp_path):
    out_json = tmp_path / "r.json"
    code, _, _ = run(capsys, "reproduce", "--json", str(out_json))
    data = json.loads(out_json.read_text())
    statuses = [c["status"] for c in data["claims"]]
    assert code == 0 and data["ok"]
    assert set(statuses) <= {"match", "bounded"}
    # same config, same verdicts
    code2, _, _ = run(capsys, "reproduce", "--json", str(out_json))
    again = json.loads(out_json.read_text())
    assert code2 == 0
    assert [(c["claim"], c["computed"], c["status"]) for c in again["claims"]] == \
           [(c["claim"], c["computed"], c["status"]) for c in data["claims"]]
