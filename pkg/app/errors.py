"""
Domain errors raised by the belief-change kernel.
"""

from typing import Iterable


class BeliefChangeError(ValueError):
    """Base class for every error the kernel raises on bad input."""


class SentenceSyntaxError(BeliefChangeError):
    """A sentence does not conform to the grammar."""

    def __init__(self, text: str, token_index: int, column: int, detail: str = ""):
        self.text = text
        self.token_index = token_index
        self.column = column
        message = f"Syntax error at token {token_index} (column {column}) in '{text}'"
        if detail:
            message += f": {detail}"
        super().__init__(message)


class UnknownAtomError(BeliefChangeError):
    """A sentence mentions an atom outside the declared vocabulary."""

    def __init__(self, atom: str, atoms: Iterable[str]):
        self.atom = atom
        super().__init__(f"Unknown atom '{atom}' (vocabulary: {', '.join(atoms)})")


class UnknownWorldError(BeliefChangeError):
    """A world token does not name a world of the declared universe."""

    def __init__(self, label: str, labels: Iterable[str]):
        self.label = label
        super().__init__(f"Unknown world '{label}' (worlds: {', '.join(labels)})")


class InvalidVocabularyError(BeliefChangeError):
    pass


class InvalidTPOError(BeliefChangeError):
    pass


class InvalidScheduleError(BeliefChangeError):
    pass


class InconsistentInputError(BeliefChangeError):
    """Revision by a sentence with no models."""


class TautologyContractionError(BeliefChangeError):
    """Contraction by a sentence true in every world."""


class InadmissibleInputError(BeliefChangeError):
    """An operator is applied to an input outside its domain."""


class CapExceededError(BeliefChangeError):
    pass


class UnknownIdentifierError(BeliefChangeError):
    """An operator, property, postulate or theorem token is not recognised."""

    def __init__(self, kind: str, token: str, known: Iterable[str]):
        self.kind = kind
        self.token = token
        super().__init__(f"Unknown {kind} '{token}' (expected one of: {', '.join(known)})")


class OperatorMismatchError(BeliefChangeError):
    pass


class WitnessVerificationError(BeliefChangeError):
    pass
