"""
Revision and contraction operators on belief states.

The `*_order` functions work on a bare TPO and a world set; the state-level
functions accept a Sentence (needs the state's vocabulary) or a WorldSet.
"""

import logging
from itertools import zip_longest
from typing import Union

from app.errors import (
    InadmissibleInputError,
    InconsistentInputError,
    InvalidVocabularyError,
    TautologyContractionError,
)
from app.models.belief import (
    BeliefState,
    ContractionKind,
    ContractionOpId,
    RevisionOpId,
)
from app.models.combinator import STQ, Combinator
from app.models.logic import Sentence, WorldSet
from app.models.tpo import TPO
from app.services.combinators import combine, right_biased_combine
from app.services.semantics import models
from app.services.tpo_core import min_mask

logger = logging.getLogger(__name__)

Input = Union[Sentence, WorldSet]


def input_models(state: BeliefState, a: Input) -> WorldSet:
    if isinstance(a, WorldSet):
        if a.size != state.order.size:
            raise InvalidVocabularyError("input ranges over a different universe")
        return a
    if state.vocabulary is None:
        raise InvalidVocabularyError("sentences need a state over a vocabulary; pass a world set instead")
    return models(a, state.vocabulary)


def revised_order(order: TPO, a: WorldSet, op: RevisionOpId) -> TPO:
    if not a:
        raise InconsistentInputError("cannot revise by an inconsistent input")
    best = min_mask(order, a.mask)
    if op == RevisionOpId.NATURAL:
        rest = [cell & ~best for cell in order.masks]
    elif op == RevisionOpId.RESTRAINED:
        rest = []
        for cell in order.masks:
            cell &= ~best
            rest += [cell & a.mask, cell & ~a.mask]
    elif op == RevisionOpId.LEXICOGRAPHIC:
        inside = [cell & a.mask for cell in order.masks]
        outside = [cell & ~a.mask for cell in order.masks]
        return TPO.from_masks([cell for cell in inside + outside if cell], order.size)
    else:
        raise ValueError(f"unsupported revision operator {op!r}")
    return TPO.from_masks([best] + [cell for cell in rest if cell], order.size)


def revise(state: BeliefState, a: Input, op: "RevisionOpId | str" = RevisionOpId.LEXICOGRAPHIC) -> BeliefState:
    """
    Revise by a consistent input.

    natural: the best a-worlds become the lowest cell, nothing else moves.
    restrained: as natural, and ties split with a-worlds first.
    lex: every a-world below every not-a-world, each block keeping its order.
    """
    op = RevisionOpId.parse(op)
    return state.with_order(revised_order(state.order, input_models(state, a), op))


def _require_not_tautology(a: WorldSet) -> None:
    if a.is_full:
        raise TautologyContractionError("cannot contract by a tautology")


def via_combi_order(order: TPO, a: WorldSet, op: RevisionOpId, combinator: Combinator) -> TPO:
    _require_not_tautology(a)
    return combine(order, revised_order(order, ~a, op), combinator)


def contract_via_combi(
    state: BeliefState,
    a: Input,
    op: "RevisionOpId | str" = RevisionOpId.LEXICOGRAPHIC,
    combinator: Combinator = STQ,
) -> BeliefState:
    """Combine the prior order with the order revised by not-a."""
    op = RevisionOpId.parse(op)
    return state.with_order(via_combi_order(state.order, input_models(state, a), op, combinator))


def natural_contraction_order(order: TPO, a: WorldSet) -> TPO:
    _require_not_tautology(a)
    bottom = min_mask(order, (~a).mask) | order.masks[0]
    rest = [cell & ~bottom for cell in order.masks]
    return TPO.from_masks([bottom] + [cell for cell in rest if cell], order.size)


def natural_contraction(state: BeliefState, a: Input) -> BeliefState:
    """The best not-a-worlds join the lowest cell; nothing else moves."""
    return state.with_order(natural_contraction_order(state.order, input_models(state, a)))


def lexicographic_contraction_order(order: TPO, a: WorldSet) -> TPO:
    _require_not_tautology(a)
    if not a:
        raise InadmissibleInputError("lexicographic contraction needs a consistent input")
    inside = [cell & a.mask for cell in order.masks if cell & a.mask]
    outside = [cell & ~a.mask for cell in order.masks if cell & ~a.mask]
    cells = [left | right for left, right in zip_longest(inside, outside, fillvalue=0)]
    return TPO.from_masks(cells, order.size)


def lexicographic_contraction(state: BeliefState, a: Input) -> BeliefState:
    """Cell i joins the i-th best a-worlds with the i-th best not-a-worlds."""
    return state.with_order(lexicographic_contraction_order(state.order, input_models(state, a)))


def priority_contraction_order(order: TPO, a: WorldSet, op: RevisionOpId = RevisionOpId.LEXICOGRAPHIC) -> TPO:
    _require_not_tautology(a)
    return right_biased_combine(order, revised_order(order, ~a, op))


def priority_contraction(
    state: BeliefState, a: Input, op: "RevisionOpId | str" = RevisionOpId.LEXICOGRAPHIC
) -> BeliefState:
    """Right-biased combination of the prior order with its revision by not-a."""
    op = RevisionOpId.parse(op)
    return state.with_order(priority_contraction_order(state.order, input_models(state, a), op))


def contracted_order(order: TPO, a: WorldSet, op: ContractionOpId) -> TPO:
    if op.kind == ContractionKind.VIA_COMBI:
        return via_combi_order(order, a, op.revision, op.combinator)
    if op.kind == ContractionKind.NATURAL:
        return natural_contraction_order(order, a)
    if op.kind == ContractionKind.LEXICOGRAPHIC:
        return lexicographic_contraction_order(order, a)
    if op.kind == ContractionKind.PRIORITY:
        return priority_contraction_order(order, a, op.revision)
    raise ValueError(f"unsupported contraction operator {op!r}")


def contract(state: BeliefState, a: Input, op: ContractionOpId) -> BeliefState:
    logger.debug("contracting with %s", op.label)
    return state.with_order(contracted_order(state.order, input_models(state, a), op))


def is_strongly_believed(state: BeliefState, a: Input) -> bool:
    """a is consistent and every a-world is strictly more plausible than every not-a-world."""
    worlds = input_models(state, a)
    return strongly_believed_in(state.order, worlds.mask)


def strongly_believed_in(order: TPO, mask: int) -> bool:
    if not mask:
        return False
    ranks = order.ranks
    inside = [ranks[x] for x in range(order.size) if mask >> x & 1]
    outside = [ranks[x] for x in range(order.size) if not mask >> x & 1]
    return not outside or max(inside) < min(outside)
