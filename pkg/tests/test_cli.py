import json

import pytest

from altgroup.cli import main, run


def test_table_csv():
    out, code = run(["table", "a", "--n", "5", "--format", "csv"])
    assert code == 0
    assert out.splitlines()[0] == "n,k,value"
    assert out.splitlines()[-1] == "5,3,24"


def test_table_json_and_text():
    out, _ = run(["table", "a", "--n", "4", "--format", "json"])
    assert json.loads(out)["rows"][4] == [1, 5, 6, 0, 0]
    out, _ = run(["table", "stirling1", "--n", "4"])
    assert out.splitlines()[-1] == "4: 0 6 11 6 1"


def test_stirling():
    out, code = run(["stirling", "--kind", "1", "--r", "2", "--n", "4", "--format", "csv"])
    assert code == 0 and "4,2,6" in out.splitlines()
    out, _ = run(["stirling", "--kind", "2", "--r", "2", "--n", "3", "--format", "csv"])
    assert "3,2,2" in out.splitlines()


def test_length():
    assert run(["length", "--set", "a-transpositions", "(1 3)(2 4)"]) == ("2", 0)
    assert run(["length", "--set", "coxeter", "3 4 1 2"]) == ("4", 0)
    assert run(["length", "--set", "transpositions", "(1 2 3)", "--n", "4"]) == ("2", 0)
    assert run(["length", "--set", "mitsuhashi", "(1 2)(3 4)"]) == ("1", 0)
    out, code = run(["length", "(1 2)"])
    assert code == 2 and "odd" in out


def test_canon():
    assert run(["canon", "(1 3)(2 4)"]) == ("v3=(1 2)(2 3), v4=(1 2)(2 4)", 0)
    out, _ = run(["canon", "(1 3)(2 4)", "--format", "json"])
    assert json.loads(out) == {"n": 4, "factors": [2, 2]}


def test_stats():
    assert run(["stats", "--n", "3"]) == ("n=3 E=2/3 Var=2/9", 0)
    out, _ = run(["stats", "--n", "2", "--n-max", "4", "--format", "csv"])
    assert out.splitlines() == ["n,E,Var", "2,0,0", "3,2/3,2/9", "4,17/12,59/144"]
    out, _ = run(["stats", "--n", "3", "--float"])
    assert "0.666666666667" in out


def test_genfunc():
    assert run(["genfunc", "a", "--n", "5"]) == ("1 + 9x + 26x^2 + 24x^3", 0)
    assert run(["genfunc", "rr", "--n", "4"]) == ("1 + 3q + 4q^2 + 4q^3", 0)
    out, _ = run(["genfunc", "rstirling1", "--n", "4", "--r", "2", "--format", "json"])
    assert json.loads(out)["coefficients"] == [0, 0, 6, 5, 1]
    assert run(["genfunc", "rstirling2", "--k", "2", "--r", "2", "--terms", "6"]) == ("0 0 1 2 4 8", 0)


def test_bijection():
    out, code = run(["bijection", "--n", "4"])
    assert code == 0
    assert out.splitlines() == ["k,|A(n,k)|,|P(n,n-k)|", "0,1,1", "1,5,5", "2,6,6", "PASS"]


def test_verify_small():
    out, code = run(["verify", "--suite", "canon", "--max-n", "5"])
    assert code == 0 and out.endswith("ALL PASS")
    out, code = run(["verify", "--suite", "rr", "--max-n", "6", "--format", "json"])
    assert code == 0 and json.loads(out)["passed"]


def test_verify_all_max_n_7():
    out, code = run(["verify", "--suite", "all", "--max-n", "7"])
    assert code == 0, out


@pytest.mark.parametrize("argv", [
    [], ["nosuch"], ["table", "a"], ["table", "a", "--n", "3", "--bogus"],
    ["length", "(1 1)"], ["stats", "--n", "1"], ["genfunc", "a"], ["table", "a", "--n", "3", "--r", "0"],
])
def test_usage_errors(argv):
    out, code = run(argv)
    assert code == 2
    assert out.startswith("error:")
    assert len(out.splitlines()) == 1


def test_main_exit_code(capsys):
    assert main(["table", "a", "--n", "3"]) == 0
    assert capsys.readouterr().out.startswith("0: 1")
    assert main(["nosuch"]) == 2


def test_byte_stable():
    a = run(["table", "stirling2", "--n", "12", "--format", "json"])
    b = run(["table", "stirling2", "--n", "12", "--format", "json"])
    assert a == b
