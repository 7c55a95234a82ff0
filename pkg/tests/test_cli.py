import io
import json

import pytest

from app.cli import cli_main

WORLDS = ["--worlds", "w,x,y,z"]
PAIR = ["--left", "z | w | x y", "--right", "x z | y | w"]
WITNESS = ["--atoms", "p,q", "--state", "11 | 10 01 | 00"]


def run(*argv):
    out = io.StringIO()
    code = cli_main(list(argv), out=out)
    return code, out.getvalue()


@pytest.mark.parametrize(
    "combinator, expected",
    [("stq", "x z | w y"), ("tq:12,2,1", "x z | y | w"), ("tq:12,1", "x z | w | y"), ("right-biased", "x z | y | w")],
)
def test_combine(combinator, expected):
    code, out = run("combine", *WORLDS, *PAIR, "--combinator", combinator)
    assert code == 0
    assert out == expected + "\n"


def test_revise_propositional():
    code, out = run("revise", *WITNESS, "--input", "!p", "--op", "lex")
    assert (code, out) == (0, "01 | 00 | 11 | 10\n")


@pytest.mark.parametrize("op, expected", [("lex", "x y | w z"), ("via-combi", "x y | z | w"), ("natural", "x y | z | w")])
def test_contract_abstract(op, expected):
    code, out = run("contract", *WORLDS, "--state", "x | y | z | w", "--input", "{x, w}", "--op", op)
    assert (code, out) == (0, expected + "\n")


def test_expected_counterexample():
    code, out = run("check", "--postulate", "VAC", *WITNESS, "--expect-fail")
    assert code == 0
    assert out.startswith("counterexample to VAC")


def test_unexpected_counterexample():
    code, _ = run("check", "--postulate", "VAC", *WITNESS)
    assert code == 1


def test_postulate_holds():
    code, out = run("check", "--postulate", "HI", *WITNESS, "--contraction", "via-combi")
    assert (code, out) == (0, "holds\n")


def test_property_check_as_json():
    code, out = run("check", "--property", "PAR", *WORLDS, *PAIR, "--combined", "x z | y | w", "--json")
    assert code == 1
    payload = json.loads(out)
    assert payload["holds"] is False
    assert payload["counterexample"]["worlds"] == ["y", "w"]


def test_verify_examples():
    code, out = run("verify", "--theorem", "examples")
    assert code == 0
    assert out.splitlines()[0].startswith("theorem: examples")
    assert out.rstrip().endswith("result: PASS")


def test_verify_json():
    code, out = run("verify", "--theorem", "examples", "--json")
    assert code == 0
    assert json.loads(out)["violation_count"] == 0


def test_demo_triviality():
    code, out = run("demo", "triviality")
    assert code == 0
    assert out.startswith("state: 11 | 10 01 | 00")
    assert "counterexample to EHI" in out
    assert "counterexample to VAC" in out
    assert "1 state(s) over p, q satisfy all three clauses" in out


class TestErrors:
    def test_syntax_error(self, capsys):
        code, _ = run("revise", *WITNESS, "--input", "p & & q")
        assert code == 2
        assert "Syntax error at token 3" in capsys.readouterr().err

    def test_cap(self, capsys):
        code, _ = run("verify", "--theorem", "prop3", "--size", "9")
        assert code == 2
        assert "error:" in capsys.readouterr().err

    def test_missing_orders(self):
        code, _ = run("check", "--property", "HI", *WORLDS, "--left", "w x y z")
        assert code == 2

    def test_usage(self):
        assert run("frobnicate")[0] == 2
        assert run("combine", *PAIR)[0] == 2
