"""
TeamQueue schedule, combinator and combinator-property models.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Callable, FrozenSet, Iterable, Optional, Tuple

from app.errors import InvalidScheduleError, UnknownIdentifierError
from app.models.tpo import TPO

BOTH = frozenset({1, 2})
FIRST = frozenset({1})
SECOND = frozenset({2})

_CELL_TOKENS = {"12": BOTH, "21": BOTH, "1": FIRST, "2": SECOND}


@dataclass(frozen=True)
class ASequence:
    """
    Queue-selection schedule a(1), a(2), ... of a TeamQueue combinator.

    Finite list of cells whose last cell repeats forever. Trailing repeats
    are folded, so `12,2,2` and `12,2` are the same schedule.
    """

    cells: Tuple[FrozenSet[int], ...]

    def __post_init__(self):
        cells = tuple(frozenset(cell) for cell in self.cells)
        if not cells:
            raise InvalidScheduleError("a schedule needs at least one cell")
        for position, cell in enumerate(cells, start=1):
            if not cell or not cell <= BOTH:
                raise InvalidScheduleError(
                    f"cell {position} must be a nonempty subset of {{1,2}}, got {sorted(cell)}"
                )
        if cells[0] != BOTH:
            raise InvalidScheduleError("both queues must be processed at the first step")
        while len(cells) > 1 and cells[-1] == cells[-2]:
            cells = cells[:-1]
        object.__setattr__(self, "cells", cells)

    @classmethod
    def of(cls, cells: Iterable[Iterable[int]]) -> "ASequence":
        return cls(tuple(frozenset(cell) for cell in cells))

    @classmethod
    def parse(cls, text: str) -> "ASequence":
        """Parse the comma-separated form, e.g. `12,2,1`."""
        cells = []
        for token in text.split(","):
            token = token.strip()
            if token not in _CELL_TOKENS:
                raise InvalidScheduleError(f"bad schedule cell '{token}' in '{text}'")
            cells.append(_CELL_TOKENS[token])
        return cls(tuple(cells))

    def at(self, step: int) -> FrozenSet[int]:
        """Cell for 1-based step i; the last cell repeats."""
        return self.cells[min(step, len(self.cells)) - 1]

    def __str__(self) -> str:
        return ",".join("".join(str(j) for j in sorted(cell)) for cell in self.cells)


SYNCHRONOUS_SCHEDULE = ASequence((BOTH,))
RIGHT_BIASED_SCHEDULE = ASequence((BOTH, SECOND))
LEFT_BIASED_SCHEDULE = ASequence((BOTH, FIRST))


class CombinatorKind(str, Enum):
    TEAM_QUEUE = "tq"
    STQ = "stq"
    RIGHT_BIASED = "right-biased"


@dataclass(frozen=True)
class Combinator:
    """
    A TeamQueue combinator.

    Either a fixed schedule used for every pair, or an `assignment` picking a
    schedule per ordered input pair.
    """

    kind: CombinatorKind
    schedule: Optional[ASequence] = None
    assignment: Optional[Callable[[TPO, TPO], ASequence]] = field(default=None, compare=False)
    name: str = ""

    def schedule_for(self, left: TPO, right: TPO) -> ASequence:
        if self.kind == CombinatorKind.STQ:
            return SYNCHRONOUS_SCHEDULE
        if self.kind == CombinatorKind.RIGHT_BIASED:
            return RIGHT_BIASED_SCHEDULE
        if self.assignment is not None:
            return self.assignment(left, right)
        if self.schedule is None:
            raise InvalidScheduleError("TeamQueue combinator without a schedule")
        return self.schedule

    @property
    def token(self) -> str:
        if self.name:
            return self.name
        if self.kind == CombinatorKind.TEAM_QUEUE:
            return f"tq:{self.schedule}"
        return self.kind.value

    @classmethod
    def team_queue(cls, schedule: ASequence) -> "Combinator":
        return cls(CombinatorKind.TEAM_QUEUE, schedule=schedule)

    @classmethod
    def parse(cls, token: str) -> "Combinator":
        """Parse `stq`, `right-biased` or `tq:<schedule>`."""
        token = token.strip()
        if token == CombinatorKind.STQ.value:
            return STQ
        if token == CombinatorKind.RIGHT_BIASED.value:
            return RIGHT_BIASED
        if token.startswith("tq:"):
            return cls.team_queue(ASequence.parse(token[3:]))
        raise UnknownIdentifierError("combinator", token, ["stq", "right-biased", "tq:<schedule>"])


STQ = Combinator(CombinatorKind.STQ)
RIGHT_BIASED = Combinator(CombinatorKind.RIGHT_BIASED)
LEFT_BIASED = Combinator.team_queue(LEFT_BIASED_SCHEDULE)


class PropertyId(str, Enum):
    HI = "HI"
    EHI = "EHI"
    UB = "UB"
    LB = "LB"
    SPU = "SPU"
    WPU = "WPU"
    SPU_PLUS = "SPU+"
    WPU_PLUS = "WPU+"
    NO = "NO"
    TRI = "TRI"
    PAR = "PAR"
    SB = "SB"

    @classmethod
    def parse(cls, token: "PropertyId | str") -> "PropertyId":
        if isinstance(token, cls):
            return token
        for member in cls:
            if member.value == token.strip().upper():
                return member
        raise UnknownIdentifierError("property", token, [member.value for member in cls])
