import pytest

from app.errors import (
    InadmissibleInputError,
    InconsistentInputError,
    InvalidVocabularyError,
    TautologyContractionError,
)
from app.models.belief import BeliefState, ContractionKind, ContractionOpId, RevisionOpId
from app.models.combinator import RIGHT_BIASED, STQ
from app.models.logic import WorldSet
from app.services.change_ops import (
    contract,
    contract_via_combi,
    is_strongly_believed,
    lexicographic_contraction,
    natural_contraction,
    priority_contraction,
    revise,
    revised_order,
)
from app.services.formula_parser import parse_sentence
from app.services.text_format import format_tpo, parse_world_set


@pytest.fixture
def state(tpo):
    return lambda text: BeliefState(tpo(text))


@pytest.fixture
def ws(wxyz):
    return lambda text: parse_world_set(text, wxyz)


class TestRevision:
    @pytest.mark.parametrize(
        "op, expected",
        [
            ("natural", "x | y | z w"),
            ("restrained", "x | y | z | w"),
            ("lex", "x | z | y | w"),
        ],
    )
    def test_operators_differ_on_a_tied_state(self, state, ws, tpo, op, expected):
        assert revise(state("x y | z w"), ws("{x, z}"), op).order == tpo(expected)

    def test_belief_set_is_the_best_input_worlds(self, state, ws):
        for op in RevisionOpId:
            assert revise(state("x y | z w"), ws("{z, w}"), op).belief_set == ws("{z, w}")

    def test_inconsistent_input(self, state, ws):
        with pytest.raises(InconsistentInputError):
            revise(state("x | y z w"), ws("{}"))

    def test_sentences_need_a_vocabulary(self, state):
        with pytest.raises(InvalidVocabularyError):
            revise(state("x | y z w"), parse_sentence("p"))

    def test_propositional_revision(self, pq, pq_state):
        witness = pq_state("11 | 10 01 | 00")
        lex = revise(witness, parse_sentence("!p", pq), "lex")
        natural = revise(witness, parse_sentence("!p", pq), RevisionOpId.NATURAL)
        assert format_tpo(lex.order, pq.space) == "01 | 00 | 11 | 10"
        assert format_tpo(natural.order, pq.space) == "01 | 11 | 10 | 00"


class TestContraction:
    def test_lex_against_its_combined_form(self, state, ws, tpo):
        start = state("x | y | z | w")
        a = ws("{x, w}")
        assert revised_order(start.order, ~a, RevisionOpId.LEXICOGRAPHIC) == tpo("y | z | x | w")
        assert lexicographic_contraction(start, a).order == tpo("x y | z w")
        assert contract_via_combi(start, a, "lex", STQ).order == tpo("x y | z | w")

    def test_natural_contraction(self, state, ws, tpo):
        assert natural_contraction(state("x | y | z | w"), ws("{x, w}")).order == tpo("x y | z | w")
        assert natural_contraction(state("x | y | z | w"), ws("{}")).order == tpo("x | y | z | w")

    def test_priority_differs_from_natural(self, state, ws, tpo):
        start = state("x | y | z | w")
        a = ws("{x, z}")
        assert priority_contraction(start, a).order == tpo("x y | w | z")
        assert natural_contraction(start, a).order == tpo("x y | z | w")

    def test_priority_is_the_right_biased_combination(self, state, ws):
        start = state("x | y | z | w")
        a = ws("{x, z}")
        assert priority_contraction(start, a) == contract_via_combi(start, a, "lex", RIGHT_BIASED)

    def test_tautology_is_refused(self, state, wxyz):
        for kind in ContractionKind:
            with pytest.raises(TautologyContractionError):
                contract(state("x | y z w"), wxyz.full, ContractionOpId(kind))

    def test_lex_needs_a_consistent_input(self, state, ws):
        with pytest.raises(InadmissibleInputError):
            lexicographic_contraction(state("x | y z w"), ws("{}"))

    def test_dispatch(self, state, ws):
        start, a = state("x | y | z | w"), ws("{x, w}")
        assert contract(start, a, ContractionOpId(ContractionKind.NATURAL)) == natural_contraction(start, a)
        assert contract(start, a, ContractionOpId.parse("lex")) == lexicographic_contraction(start, a)
        assert contract(start, a, ContractionOpId.parse("priority")) == priority_contraction(start, a)
        via = ContractionOpId.parse("via-combi", "natural", "stq")
        assert contract(start, a, via) == contract_via_combi(start, a, "natural", STQ)

    def test_admissibility(self, ws, wxyz):
        assert not ContractionOpId.parse("lex").admits(ws("{}"))
        assert ContractionOpId.parse("natural").admits(ws("{}"))
        assert not ContractionOpId.parse("natural").admits(wxyz.full)


def test_strong_belief(state, ws):
    start = state("x | y | z w")
    assert is_strongly_believed(start, ws("{x}"))
    assert is_strongly_believed(start, ws("{x, y}"))
    assert not is_strongly_believed(start, ws("{x, z}"))
    assert not is_strongly_believed(start, ws("{}"))
    assert is_strongly_believed(start, WorldSet.full(4))
