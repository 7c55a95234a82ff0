"""
Truth-table semantics: model sets, consequence and canonical theories.
"""

from functools import lru_cache, reduce
from typing import Optional, Union

from app.errors import UnknownAtomError
from app.models.logic import (
    And,
    Atom,
    Bot,
    Iff,
    Implies,
    Not,
    Or,
    Sentence,
    Top,
    Vocabulary,
    WorldSet,
)


@lru_cache(maxsize=4096)
def models(sentence: Sentence, vocabulary: Vocabulary) -> WorldSet:
    """Worlds of the vocabulary that satisfy `sentence`."""
    size = vocabulary.n_worlds
    if isinstance(sentence, Atom):
        if sentence.name not in vocabulary.atoms:
            raise UnknownAtomError(sentence.name, vocabulary.atoms)
        return vocabulary.atom_models(sentence.name)
    if isinstance(sentence, Top):
        return WorldSet.full(size)
    if isinstance(sentence, Bot):
        return WorldSet.empty(size)
    if isinstance(sentence, Not):
        return ~models(sentence.operand, vocabulary)

    left = models(sentence.left, vocabulary)
    right = models(sentence.right, vocabulary)
    if isinstance(sentence, And):
        return left & right
    if isinstance(sentence, Or):
        return left | right
    if isinstance(sentence, Implies):
        return ~left | right
    if isinstance(sentence, Iff):
        return (left & right) | (~left & ~right)
    raise TypeError(f"not a sentence: {sentence!r}")


def entails(premise: WorldSet, sentence: Union[Sentence, WorldSet], vocabulary: Optional[Vocabulary] = None) -> bool:
    """
    premise |= sentence, i.e. premise is within the models of sentence.

    A world set stands for any sentence with exactly those models, so it
    needs no vocabulary.
    """
    if isinstance(sentence, WorldSet):
        return premise <= sentence
    return premise <= models(sentence, vocabulary)


def theory_of(worlds: WorldSet, vocabulary: Vocabulary) -> Sentence:
    """
    Canonical full-DNF sentence whose models are exactly `worlds`.

    Disjuncts follow world index order, literals follow atom order, and both
    nest to the left. The empty set gives F and the full set gives T.
    """
    if not worlds:
        return Bot()
    if worlds.is_full:
        return Top()
    disjuncts = []
    for index in worlds:
        literals = [
            Atom(atom) if index >> k & 1 else Not(Atom(atom))
            for k, atom in enumerate(vocabulary.atoms)
        ]
        disjuncts.append(reduce(And, literals))
    return reduce(Or, disjuncts)
