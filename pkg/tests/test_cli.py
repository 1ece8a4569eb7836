import json

import pytest

from formalballs.cli import ParseFailure, main, parse_map_expr, parse_real_expr


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out.strip()
    return code, json.loads(out)


def test_real_eval_examples(capsys):
    code, payload = run_cli(capsys, "real-eval", "add(1/3, add(1/3, 1/3))")
    assert code == 0
    assert payload == {"value": "1 ± 2^-30"}
    code, payload = run_cli(
        capsys, "real-eval", "mul(3/2, 3/2, 3)", "--precision", "10"
    )
    assert code == 0
    assert payload["value"].startswith("2.25")


def test_real_eval_bad_expr_exit_2(capsys):
    code, payload = run_cli(capsys, "real-eval", "add(1/3")
    assert code == 2
    assert "error" in payload
    code, payload = run_cli(capsys, "real-eval", "frob(1)")
    assert code == 2


def test_map_apply_examples(capsys):
    code, payload = run_cli(capsys, "map-apply", "compose(scale(1/2), add(1))", "3")
    assert code == 0
    assert payload["value"].startswith("2 ")
    code, payload = run_cli(capsys, "map-apply", "pair(id, neg)", "5/2")
    assert code == 0
    assert len(payload["values"]) == 2
    code, payload = run_cli(capsys, "map-apply", "proj2", "1,7")
    assert code == 0
    assert payload["value"].startswith("7 ")


def test_map_apply_arity_mismatch(capsys):
    code, payload = run_cli(capsys, "map-apply", "id", "1,2")
    assert code == 2


def test_ball_check_way_inside(capsys):
    payload = json.dumps(
        {
            "check": "way-inside",
            "u": [{"c": "0", "r": "1/2"}],
            "eps": "1/4",
            "v": [{"c": "0", "r": "2"}],
        }
    )
    code, out = run_cli(capsys, "ball-check", payload)
    assert code == 0
    assert out == {"answer": "Yes", "check": "way-inside"}


def test_ball_check_diameter_and_member(capsys):
    payload = json.dumps(
        {"check": "diameter", "u": [{"c": "0", "r": "1/2"}], "q": "101/100"}
    )
    code, out = run_cli(capsys, "ball-check", payload)
    assert code == 0 and out["answer"] == "Yes"
    payload = json.dumps(
        {"check": "member", "u": [{"c": "0", "r": "1"}], "point": "1/2"}
    )
    code, out = run_cli(capsys, "ball-check", payload)
    assert code == 0 and out["answer"] == "Yes"


def test_ball_check_meet_witness(capsys):
    payload = json.dumps(
        {
            "check": "meet",
            "u": [{"c": "0", "r": "1"}],
            "v": [{"c": "1", "r": "1"}],
        }
    )
    code, out = run_cli(capsys, "ball-check", payload)
    assert code == 0 and out["witness"] is not None


def test_mm_check_pass_exit_0(capsys):
    payload = json.dumps(
        {
            "axiom": "MM3",
            "map": "scale(1/2)",
            "parts": {"u": [{"c": "0", "r": "1"}], "q": "1/4"},
        }
    )
    code, out = run_cli(capsys, "mm-check", payload)
    assert code == 0
    assert out["result"] == "Pass"


def test_mm_check_bad_axiom_exit_2(capsys):
    code, out = run_cli(capsys, "mm-check", json.dumps({"axiom": "MM9", "parts": {}}))
    assert code == 2


def test_admissible_example(capsys):
    payload = json.dumps(
        {"n": 2, "lowers": [[[0], "0"]], "uppers": [[[0], "1"]]}
    )
    code, out = run_cli(capsys, "admissible", payload)
    assert code == 0
    assert out == {"admissible": False, "point": None}
    payload = json.dumps(
        {"n": 2, "lowers": [[[0], "0"]], "uppers": [[[1], "1"]]}
    )
    code, out = run_cli(capsys, "admissible", payload)
    assert code == 0
    assert out["admissible"] is True
    assert out["point"] == {"0": "-1/1", "1": "2/1"}


def test_spec_command(capsys):
    code, out = run_cli(capsys, "spec", json.dumps({"n": 3}))
    assert code == 0
    assert out["characters"] == ["eval@0", "eval@1", "eval@2"]
    assert all(r["result"] == "Pass" for r in out["reports"])


def test_law_suite_and_determinism(capsys, tmp_path):
    out1 = tmp_path / "a.json"
    out2 = tmp_path / "b.json"
    code = main(["law-suite", "--seed", "3", "--effort", "16",
                 "--output", str(out1)])
    capsys.readouterr()
    assert code == 0
    code = main(["law-suite", "--seed", "3", "--effort", "16",
                 "--output", str(out2)])
    capsys.readouterr()
    assert code == 0
    assert out1.read_bytes() == out2.read_bytes()
    assert json.loads(out1.read_text())["result"] == "Pass"


def test_invalid_flag_values(capsys):
    code, out = run_cli(capsys, "real-eval", "1", "--precision", "0")
    assert code == 2


def test_parsers_reject_trailing_garbage():
    with pytest.raises(ParseFailure):
        parse_real_expr("1/2 extra")
    with pytest.raises(ParseFailure):
        parse_map_expr("id id")
