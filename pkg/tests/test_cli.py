import json

import pytest

from sl2hilb.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_info(capsys):
    code, out, _ = run(capsys, "info", "1", "3", "2")
    assert code == 0
    assert "toric\ttrue" in out and "generators\t(2,0),(3,1)" in out
    assert "SL(2)/C_2" in out and "SL(2)/U_4" in out


def test_info_non_toric_and_smooth(capsys):
    code, out, _ = run(capsys, "info", "2", "5", "4")
    assert code == 0 and "non-toric" in out and "J-dependent commands disabled" in out
    code, out, _ = run(capsys, "info", "1", "1", "5")
    assert code == 0 and "smooth case" in out


def test_invalid_params(capsys):
    code, _, err = run(capsys, "info", "2", "4", "1")
    assert code == 2 and "coprime" in err
    code, _, err = run(capsys, "verify", "2", "5", "4", "J", "--s", "0")
    assert code == 2 and "non-toric" in err
    with pytest.raises(SystemExit) as exc:
        main(["verify", "1", "3", "2", "I", "--s", "1/0"])
    assert exc.value.code == 2


def test_lambda_table(capsys):
    code, out, _ = run(capsys, "lambda-table", "1", "3", "2", "--n", "0..2", "--d", "0")
    rows = [line.split("\t") for line in out.splitlines() if not line.startswith("#")][1:]
    assert len(rows) == 11
    assert ["2", "2", "-2", "X1^4*X3^2", "false"] in rows
    assert ["2", "0", "-2", "X1*X3", "true"] in rows
    code, out, _ = run(capsys, "lambda-table", "1", "2", "1", "--n", "0..0", "--d", "0")
    assert "0\t0\t0\t1\ttrue" in out


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "1", "3", "2", "I", "--s", "0,1", "--n", "-4..4", "--D", "12")
    assert code == 0 and out.count("verdict: verified") == 2
    code, _, _ = run(capsys, "verify", "1", "3", "2", "J", "--s", "0,1", "--n", "-4..4", "--D", "12")
    assert code == 0
    code, out, _ = run(capsys, "verify", "1", "3", "2", "I", "--s", "1", "--n", "-4..4", "--D", "4")
    assert code == 3 and "inconclusive" in out


def test_verify_output_deterministic(capsys):
    args = ["verify", "1", "2", "3", "I", "--s", "3/7", "--n", "-2..2", "--D", "10"]
    _, a, _ = run(capsys, *args)
    _, b, _ = run(capsys, *args, "--jobs", "2")
    _, c, _ = run(capsys, *args)
    assert a == c
    # the worker count is not part of the output
    assert a == b


def test_json_document(capsys):
    code, out, _ = run(capsys, "tangent", "1", "3", "2", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["config"] == {"D": 10, "command": "tangent", "format": "json", "m": 2, "p": 1, "q": 3}
    res = doc["results"][0]
    assert res["dimension"] == 3 and res["constraints"] == ["alpha1 + alpha2 - alpha3 = 0"]


def test_borel_translate_orbit(capsys):
    code, out, _ = run(capsys, "borel", "1", "3", "2")
    assert code == 0 and "stable_ideals: J_0" in out
    code, out, _ = run(capsys, "translate", "1", "3", "2", "I", "--t", "2")
    assert code == 0 and "2\t1/4\t1/4\ttrue" in out
    code, out, _ = run(capsys, "translate", "1", "3", "2", "J", "--t", "-1,1/2")
    assert code == 0 and "1/2\t16\t16\ttrue" in out
    code, out, _ = run(capsys, "orbit-vanish", "1", "2", "3")
    assert code == 0 and "false" not in out


def test_semigroup_command(capsys):
    code, out, _ = run(capsys, "semigroup", "1", "2", "3", "--format", "json")
    doc = json.loads(out)
    assert [(r["i"], r["j"]) for r in doc["results"][0]["rows"]] == [(3, 0), (4, 1), (5, 2), (6, 3)]
    assert doc["results"][0]["complete"] is True
