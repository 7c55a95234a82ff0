"""
Belief states and change-operator identifiers.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from app.errors import InvalidTPOError, UnknownIdentifierError
from app.models.combinator import STQ, Combinator
from app.models.logic import Vocabulary, WorldSet
from app.models.tpo import TPO


@dataclass(frozen=True)
class BeliefState:
    """An epistemic state: its plausibility order, optionally over a vocabulary."""

    order: TPO
    vocabulary: Optional[Vocabulary] = None

    def __post_init__(self):
        if self.vocabulary is not None and self.vocabulary.n_worlds != self.order.size:
            raise InvalidTPOError(
                f"order covers {self.order.size} worlds, vocabulary has {self.vocabulary.n_worlds}"
            )

    @property
    def belief_set(self) -> WorldSet:
        """Models of [Psi]: the most plausible cell."""
        return self.order.cells[0]

    def with_order(self, order: TPO) -> "BeliefState":
        return BeliefState(order, self.vocabulary)


class RevisionOpId(str, Enum):
    NATURAL = "natural"
    RESTRAINED = "restrained"
    LEXICOGRAPHIC = "lex"

    @classmethod
    def parse(cls, token: "RevisionOpId | str") -> "RevisionOpId":
        if isinstance(token, cls):
            return token
        for member in cls:
            if member.value == token.strip().lower():
                return member
        raise UnknownIdentifierError("revision operator", token, [member.value for member in cls])


class ContractionKind(str, Enum):
    VIA_COMBI = "via-combi"
    NATURAL = "natural"
    LEXICOGRAPHIC = "lex"
    PRIORITY = "priority"

    @classmethod
    def parse(cls, token: "ContractionKind | str") -> "ContractionKind":
        if isinstance(token, cls):
            return token
        for member in cls:
            if member.value == token.strip().lower():
                return member
        raise UnknownIdentifierError("contraction operator", token, [member.value for member in cls])


@dataclass(frozen=True)
class ContractionOpId:
    """
    A contraction operator.

    `revision` and `combinator` matter for via-combi; priority contraction
    uses `revision` for its revised order.
    """

    kind: ContractionKind
    revision: RevisionOpId = RevisionOpId.LEXICOGRAPHIC
    combinator: Combinator = STQ

    def admits(self, a: WorldSet) -> bool:
        """Contraction by a tautology is undefined; lex also needs both blocks."""
        if a.is_full:
            return False
        return bool(a) or self.kind != ContractionKind.LEXICOGRAPHIC

    @classmethod
    def parse(cls, kind: str, revision: str = "lex", combinator: str = "stq") -> "ContractionOpId":
        return cls(ContractionKind.parse(kind), RevisionOpId.parse(revision), Combinator.parse(combinator))

    @property
    def label(self) -> str:
        if self.kind == ContractionKind.VIA_COMBI:
            return f"via-combi({self.revision.value}, {self.combinator.token})"
        if self.kind == ContractionKind.PRIORITY:
            return f"priority({self.revision.value})"
        return self.kind.value
