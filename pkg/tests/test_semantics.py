from hypothesis import HealthCheck, given, settings

from app.models.logic import And, Bot, Iff, Implies, Not, Or, Top, Vocabulary, WorldSet
from app.services.formula_parser import format_sentence, parse_sentence
from app.services.semantics import entails, models, theory_of
from tests.strategies import sentences

PQR = Vocabulary(("p", "q", "r"))


def mods(text, vocabulary):
    return models(parse_sentence(text, vocabulary), vocabulary)


def test_models_follow_the_bit_encoding(pq):
    assert mods("p", pq) == WorldSet(0b1010, 4)
    assert mods("p <-> !q", pq) == WorldSet(0b0110, 4)
    assert mods("p -> q", pq) == WorldSet(0b1101, 4)
    assert mods("T", pq).is_full
    assert not mods("p & !p", pq)


def test_entails(pq):
    both = mods("p & q", pq)
    assert entails(both, parse_sentence("p"), pq)
    assert entails(both, WorldSet(0b1010, 4))
    assert not entails(mods("p", pq), parse_sentence("q"), pq)


def test_theory_of_is_canonical(pq):
    worlds = WorldSet(0b0110, 4)
    theory = theory_of(worlds, pq)
    assert format_sentence(theory) == "(p & !q) | (!p & q)"
    assert models(theory, pq) == worlds


def test_theory_of_limits(pq):
    assert theory_of(WorldSet.empty(4), pq) == Bot()
    assert theory_of(WorldSet.full(4), pq) == Top()


def test_every_world_set_round_trips(pq):
    for mask in range(16):
        worlds = WorldSet(mask, 4)
        assert models(theory_of(worlds, pq), pq) == worlds


@settings(max_examples=300, suppress_health_check=[HealthCheck.function_scoped_fixture])
@given(sentences, sentences)
def test_models_follow_the_connectives(left, right):
    a, b = models(left, PQR), models(right, PQR)
    assert models(Not(left), PQR) == ~a
    assert models(And(left, right), PQR) == a & b
    assert models(Or(left, right), PQR) == a | b
    assert models(Implies(left, right), PQR) == ~a | b
    assert models(Iff(left, right), PQR) == (a & b) | (~a & ~b)
