import json

import pytest

from cliffqt import qtype
from cliffqt.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_mul_examples(capsys):
    code, out, _ = run(capsys, "mul", "--sig", "3,0", "e12", "e13")
    assert code == 0 and out.strip() == "-e23"
    code, out, _ = run(capsys, "mul", "--sig", "1,1", "e2", "e2")
    assert code == 0 and out.strip() == "-1"
    code, out, _ = run(capsys, "mul", "--sig", "2,0", "1", "e12")
    assert code == 0 and out.strip() == "e12"


def test_mul_bracket_check(capsys):
    code, out, _ = run(capsys, "mul", "--sig", "3,0", "e12", "e13")
    assert out.strip() == "-e23"
    # commutator via the DSL checker gives the doubled value
    code, out, _ = run(capsys, "infer", "let x:2; let y:2; [x,y]")
    assert out.strip() == "2"


def test_classify_examples(capsys):
    code, out, _ = run(capsys, "classify", "--sig", "4,0", "1+e1234")
    assert code == 0 and out.splitlines()[0] == "0"
    code, out, _ = run(capsys, "classify", "--sig", "4,0", "0")
    assert code == 0 and out.strip() == "∅"
    code, out, _ = run(
        capsys, "classify", "--sig", "5,0", "--field", "complex", "e1 + i*e123"
    )
    assert code == 0 and out.splitlines()[0] == "1+i3"


def test_classify_components(capsys):
    code, out, _ = run(capsys, "classify", "--sig", "3,0", "1 + e1 + 2*e12")
    lines = out.splitlines()
    assert lines[0] == "012"
    assert "  0: 1" in lines and "  1: e1" in lines and "  2: 2*e12" in lines


def test_classify_components_complex_split(capsys):
    code, out, _ = run(
        capsys, "classify", "--sig", "5,0", "--field", "complex", "--json",
        "e1 + i*e23 + 2*e12",
    )
    data = json.loads(out)
    assert data["typeset"] == "12+i2"
    atoms = {c["atom"] for c in data["components"]}
    assert atoms == {"1", "2", "i2"}


def test_project_command(capsys):
    code, out, _ = run(capsys, "project", "--sig", "3,1", "2", "e12 + e1 - 3*e34")
    assert code == 0 and out.strip() == "e12 - 3*e34"
    code, out, _ = run(capsys, "project", "--sig", "3,1", "1", "e12")
    assert code == 0 and out.strip() == "0"


def test_tables_command(capsys):
    code, out, _ = run(capsys, "tables", "comm")
    assert code == 0
    assert "  0: 2  3  0  1" in out
    code, out, _ = run(capsys, "tables", "acomm")
    assert "  0: 0  1  2  3" in out
    code, js, _ = run(capsys, "tables", "commutator", "--json")
    data = json.loads(js)
    assert data["rows"][0] == ["2", "3", "0", "1"]
    assert data["rows"][2] == ["0", "1", "2", "3"]


def test_infer_examples(capsys):
    code, out, _ = run(capsys, "infer", "let x:1; let y:3; {x,y}")
    assert code == 0 and out.strip() == "2"
    code, out, _ = run(capsys, "infer", "rev(x)*x")
    assert code == 0 and out.strip() == "01"
    code, out, _ = run(capsys, "infer", "let u:03; [u, gri(rev(u))]")
    assert code == 0 and out.strip() == "∅"
    code, out, _ = run(capsys, "infer", "--field", "complex", "--json", "[x, conj(x)]")
    assert json.loads(out)["typeset"] == "i0123"


def test_check_pass_and_exit_codes(capsys):
    code, out, _ = run(capsys, "check", "--sig", "2,2", "--trials", "40", "rev(x)*x")
    assert code == 0
    assert "failures: 0" in out


def test_check_trials_zero_is_usage_error(capsys):
    code, _, err = run(capsys, "check", "--sig", "2,2", "--trials", "0", "x")
    assert code == 2
    assert "trials" in err


def test_check_detects_fault_injection(capsys, monkeypatch):
    bad = ((2, 3, 0, 1), (3, 0, 1, 0), (0, 1, 2, 3), (1, 0, 3, 2))
    monkeypatch.setattr(qtype, "_COMM_MAIN", bad)
    code, out, _ = run(
        capsys, "check", "--sig", "4,0", "--trials", "30", "let x:1; let y:1; [x,y]"
    )
    assert code == 1
    assert "counterexample" in out


def test_parse_error_exit_2(capsys):
    code, _, err = run(capsys, "mul", "--sig", "3,0", "e21", "e1")
    assert code == 2 and "increasing" in err
    code, _, err = run(capsys, "infer", "let x:9; x")
    assert code == 2
    code, _, err = run(capsys, "classify", "--sig", "2,0", "e1 +")
    assert code == 2


def test_selftest_pass(capsys):
    code, out, _ = run(capsys, "selftest", "--max-n", "4")
    assert code == 0
    assert "selftest: PASS" in out


def test_selftest_bounds(capsys):
    code, _, err = run(capsys, "selftest", "--max-n", "9")
    assert code == 2 and "--max-n" in err
    code, _, err = run(capsys, "selftest", "--max-n", "0")
    assert code == 2


def test_selftest_json_structure(capsys):
    code, out, _ = run(capsys, "selftest", "--max-n", "3", "--json")
    data = json.loads(out)
    assert data["ok"] is True
    assert data["tables"][0]["op"] == "commutator"
    assert data["oracle_discrepancies"] == []


def test_selftest_fails_on_corruption(capsys, monkeypatch):
    bad = ((2, 3, 0, 1), (3, 2, 1, 0), (0, 1, 2, 3), (1, 0, 3, 0))
    monkeypatch.setattr(qtype, "_COMM_MAIN", bad)
    code, out, _ = run(capsys, "selftest", "--max-n", "4")
    assert code == 1
    assert "selftest: FAIL" in out


def test_json_output_deterministic(capsys):
    args = ("check", "--sig", "2,2", "--trials", "25", "--seed", "5", "--json", "x*rev(x)")
    code1, out1, _ = run(capsys, *args)
    code2, out2, _ = run(capsys, *args)
    assert (code1, out1) == (code2, out2)
    data = json.loads(out1)
    assert data["passed"] is True and data["trials"] == 25


def test_seed_env_override(capsys, monkeypatch):
    monkeypatch.setenv("CLIFFQT_SEED", "123")
    _, out_env, _ = run(capsys, "check", "--sig", "2,2", "--trials", "5", "--json", "x")
    monkeypatch.delenv("CLIFFQT_SEED")
    _, out_default, _ = run(capsys, "check", "--sig", "2,2", "--trials", "5", "--json", "x")
    _, out_flag, _ = run(
        capsys, "check", "--sig", "2,2", "--trials", "5", "--seed", "123", "--json", "x"
    )
    assert out_env == out_flag  # env sets the default seed
    assert json.loads(out_default)["passed"] and json.loads(out_env)["passed"]


def test_usage_error_from_argparse():
    with pytest.raises(SystemExit) as exc:
        main(["mul", "--sig", "oops", "e1", "e1"])
    assert exc.value.code == 2
