import pytest

from app.errors import CapExceededError, InvalidTPOError, InvalidVocabularyError, UnknownWorldError
from app.models.logic import WorldSet
from app.models.report import Counterexample, RunReport
from app.services.text_format import (
    abstract_space,
    counterexample_report,
    format_counterexample,
    format_input,
    format_report,
    format_tpo,
    format_world_set,
    parse_input,
    parse_tpo,
    parse_world_set,
    resolve_space,
)


def test_tpo_text_round_trip(wxyz):
    for text in ("z | w | x y", "w x y z", "x | z | y | w"):
        assert format_tpo(parse_tpo(text, wxyz), wxyz) == text


def test_cells_print_in_world_order(wxyz):
    assert format_tpo(parse_tpo("y x | z w", wxyz), wxyz) == "x y | w z"


@pytest.mark.parametrize("text, error", [("x | | y z w", InvalidTPOError), ("x | y | q", UnknownWorldError), ("x | y", InvalidTPOError)])
def test_bad_orders(wxyz, text, error):
    with pytest.raises(error):
        parse_tpo(text, wxyz)


def test_world_set_forms(wxyz):
    expected = WorldSet(0b1010, 4)
    for text in ("{x, z}", "x,z", "x z", " { z ,x } "):
        assert parse_world_set(text, wxyz) == expected
    assert parse_world_set("{}", wxyz) == WorldSet.empty(4)
    assert format_world_set(expected, wxyz) == "{x, z}"


def test_inputs_in_both_modes(pq, wxyz):
    space = pq.space
    assert parse_input("!p", space) == WorldSet(0b0101, 4)
    assert parse_input("{10, 01}", space) == WorldSet(0b0110, 4)
    assert format_input(WorldSet(0b0110, 4), space) == "(p & !q) | (!p & q)"
    assert format_input(WorldSet(0b0110, 4), wxyz) == "{x, y}"


def test_spaces():
    assert abstract_space(4).labels == ("w", "x", "y", "z")
    assert resolve_space(atoms="p,q").size == 4
    assert resolve_space(worlds="a,b,c").labels == ("a", "b", "c")
    with pytest.raises(CapExceededError):
        abstract_space(9)
    with pytest.raises(InvalidVocabularyError):
        resolve_space(atoms="p", worlds="x,y")
    with pytest.raises(InvalidVocabularyError):
        resolve_space()


def test_counterexample_rendering(pq):
    space = pq.space
    found = Counterexample(
        postulate="VAC",
        states={"state": parse_tpo("11 | 10 01 | 00", space)},
        sentences={"A": WorldSet(0b0001, 4)},
        narrative="example",
    )
    report = counterexample_report(found, space)
    assert report.atoms == ["p", "q"]
    assert report.state == "11 | 10 01 | 00"
    assert report.sentences == {"A": "!p & !q"}
    text = format_counterexample(report)
    assert text.splitlines()[0] == "counterexample to VAC: example"
    assert "  A = !p & !q" in text


def test_report_header():
    report = RunReport(theorem="prop3", title="t", domain="all pairs", size=3, instances=10)
    text = format_report(report)
    assert text.splitlines()[:5] == [
        "theorem: prop3  (t)",
        "domain: all pairs",
        "size: 3",
        "instances: 10",
        "violations: 0",
    ]
    assert text.endswith("result: PASS")
