import pytest
from hypothesis import HealthCheck, given, settings

from app.errors import InvalidVocabularyError, SentenceSyntaxError, UnknownAtomError
from app.models.logic import And, Atom, Bot, Iff, Implies, Not, Or, Top, Vocabulary, WorldSet, WorldSpace
from app.services.formula_parser import atoms_of, format_sentence, parse_sentence
from tests.strategies import sentences

p, q, r = Atom("p"), Atom("q"), Atom("r")


class TestVocabulary:
    def test_world_encoding(self, pq):
        assert pq.n_worlds == 4
        assert [pq.label(i) for i in range(4)] == ["00", "10", "01", "11"]
        assert pq.world_from_label("01").index == 2
        assert pq.world(1).assignment == {"p": True, "q": False}

    def test_atom_models(self, pq):
        assert pq.atom_models("q") == WorldSet(0b1100, 4)

    @pytest.mark.parametrize("atoms", [(), ("p", "p"), ("T",), ("1p",), ("p", "q", "r", "s", "t", "u")])
    def test_rejects_bad_vocabularies(self, atoms):
        with pytest.raises(InvalidVocabularyError):
            Vocabulary(atoms)

    def test_space_labels_by_bits(self, pq):
        assert pq.space.labels == ("00", "10", "01", "11")
        assert pq.space.vocabulary == pq

    def test_world_space_rejects_duplicates(self):
        with pytest.raises(InvalidVocabularyError):
            WorldSpace.parse("x,y,x")


class TestWorldSet:
    def test_set_algebra(self):
        a, b = WorldSet(0b0101, 4), WorldSet(0b0011, 4)
        assert ~a == WorldSet(0b1010, 4)
        assert a | b == WorldSet(0b0111, 4)
        assert a & b == WorldSet(0b0001, 4)
        assert a - b == WorldSet(0b0100, 4)
        assert list(a) == [0, 2]
        assert len(a) == 2

    def test_subset(self):
        assert WorldSet(0b0001, 4) <= WorldSet(0b0011, 4)
        assert not WorldSet(0b0100, 4) <= WorldSet(0b0011, 4)
        assert WorldSet.full(3).is_full

    def test_universe_mismatch(self):
        with pytest.raises(ValueError):
            WorldSet(1, 2) | WorldSet(1, 3)


class TestParser:
    def test_precedence(self):
        assert parse_sentence("p & q -> r") == Implies(And(p, q), r)
        assert parse_sentence("!p | q & r") == Or(Not(p), And(q, r))
        assert parse_sentence("p -> q <-> r") == Iff(Implies(p, q), r)

    def test_associativity(self):
        assert parse_sentence("p -> q -> r") == Implies(p, Implies(q, r))
        assert parse_sentence("p <-> q <-> r") == Iff(Iff(p, q), r)
        assert parse_sentence("p & q & r") == And(And(p, q), r)

    def test_constants_and_double_negation(self):
        assert parse_sentence("T | F") == Or(Top(), Bot())
        assert parse_sentence("!!p") == Not(Not(p))

    def test_syntax_error_position(self):
        with pytest.raises(SentenceSyntaxError) as exc:
            parse_sentence("p & & q")
        assert exc.value.token_index == 3
        assert exc.value.column == 5
        assert str(exc.value).startswith("Syntax error at token 3 (column 5) in 'p & & q'")

    def test_syntax_error_at_end(self):
        with pytest.raises(SentenceSyntaxError) as exc:
            parse_sentence("p &")
        assert exc.value.token_index == 3

    def test_bad_character(self):
        with pytest.raises(SentenceSyntaxError) as exc:
            parse_sentence("p $ q")
        assert exc.value.token_index == 2
        assert exc.value.column == 3

    def test_unknown_atom(self, pq):
        with pytest.raises(UnknownAtomError) as exc:
            parse_sentence("p & r", pq)
        assert exc.value.atom == "r"

    def test_atoms_of(self):
        assert atoms_of(parse_sentence("q & (p | q) -> T")) == ("q", "p")


class TestFormat:
    @pytest.mark.parametrize(
        "text",
        [
            "p & q & r",
            "p & (q & r)",
            "p -> q -> r",
            "(p -> q) -> r",
            "(p | q) & r",
            "!(p & q)",
            "!!p",
            "p <-> q <-> r",
            "p <-> (q <-> r)",
        ],
    )
    def test_canonical_forms_are_fixed_points(self, text):
        assert format_sentence(parse_sentence(text)) == text

    def test_mixed_connectives_are_bracketed(self):
        assert format_sentence(parse_sentence("p & q | r")) == "(p & q) | r"


@settings(max_examples=1000, suppress_health_check=[HealthCheck.function_scoped_fixture])
@given(sentences)
def test_printing_then_parsing_gives_the_same_tree(sentence):
    assert parse_sentence(format_sentence(sentence)) == sentence
