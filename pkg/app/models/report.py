"""
Postulate identifiers, counterexamples and verification reports.
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Tuple

from pydantic import BaseModel, ConfigDict, Field, computed_field

from app.errors import UnknownIdentifierError
from app.models.logic import WorldSet
from app.models.tpo import TPO


class PostulateId(str, Enum):
    AGM_R1 = "AGM*1"
    AGM_R2 = "AGM*2"
    AGM_R3 = "AGM*3"
    AGM_R4 = "AGM*4"
    AGM_R5 = "AGM*5"
    AGM_R6 = "AGM*6"
    AGM_R7 = "AGM*7"
    AGM_R8 = "AGM*8"
    AGM_C1 = "AGM/1"
    AGM_C2 = "AGM/2"
    AGM_C3 = "AGM/3"
    AGM_C4 = "AGM/4"
    AGM_C5 = "AGM/5"
    AGM_C6 = "AGM/6"
    AGM_C7 = "AGM/7"
    AGM_C8 = "AGM/8"
    HI = "HI"
    LI = "LI"
    EHI = "EHI"
    EHI_LB = "EHI-LB"
    EHI_UB = "EHI-UB"
    EHI_SB = "EHI-SB"
    EHIC = "EHIC"
    VAC = "VAC"
    C_R1 = "C*1"
    C_R2 = "C*2"
    C_R3 = "C*3"
    C_R4 = "C*4"
    CR_R1 = "CR*1"
    CR_R2 = "CR*2"
    CR_R3 = "CR*3"
    CR_R4 = "CR*4"
    C_C1 = "C/1"
    C_C2 = "C/2"
    C_C3 = "C/3"
    C_C4 = "C/4"
    CR_C1 = "CR/1"
    CR_C2 = "CR/2"
    CR_C3 = "CR/3"
    CR_C4 = "CR/4"
    PFI = "PFI"

    @classmethod
    def parse(cls, token: "PostulateId | str") -> "PostulateId":
        """Accepts `÷` for `/` and any letter case."""
        if isinstance(token, cls):
            return token
        wanted = token.strip().replace("÷", "/").upper()
        for member in cls:
            if member.value == wanted:
                return member
        raise UnknownIdentifierError("postulate", token, [member.value for member in cls])

    @property
    def needs_contraction(self) -> bool:
        return not (
            self.value.startswith(("AGM*", "C*", "CR*")) or self == PostulateId.VAC
        )


class TheoremId(str, Enum):
    PROP1 = "prop1"
    PROP2 = "prop2"
    PROP3 = "prop3"
    PROP4 = "prop4"
    PROP5 = "prop5"
    PROP6 = "prop6"
    PROP7 = "prop7"
    PROP8 = "prop8"
    PROP9 = "prop9"
    PROP10 = "prop10"
    LEX_RECOVERY = "lex-recovery"
    PRIORITY_DISTINCTNESS = "priority-distinctness"
    AGM = "agm"
    EXAMPLES = "examples"

    @classmethod
    def parse(cls, token: "TheoremId | str") -> "TheoremId":
        if isinstance(token, cls):
            return token
        wanted = THEOREM_ALIASES.get(token.strip().lower(), token.strip().lower())
        for member in cls:
            if member.value == wanted:
                return member
        raise UnknownIdentifierError(
            "theorem", token, [member.value for member in cls] + sorted(THEOREM_ALIASES)
        )


THEOREM_ALIASES = {"thm1": "prop4", "thm2": "prop9"}


@dataclass(frozen=True)
class Counterexample:
    """
    A falsifying instance: the orders involved, the sentences (as world
    sets) and worlds that instantiate the quantifiers, and a short account.
    """

    postulate: str
    states: Dict[str, TPO]
    sentences: Dict[str, WorldSet] = field(default_factory=dict)
    worlds: Tuple[int, ...] = ()
    narrative: str = ""


class CounterexampleReport(BaseModel):
    """JSON rendering of a counterexample."""

    postulate: str
    atoms: List[str] = Field(default_factory=list)
    state: str = ""
    states: Dict[str, str] = Field(default_factory=dict)
    sentences: Dict[str, str] = Field(default_factory=dict)
    worlds: List[str] = Field(default_factory=list)
    narrative: str = ""

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "postulate": "VAC",
                "atoms": ["p", "q"],
                "state": "11 | 10 01 | 00",
                "states": {"state": "11 | 10 01 | 00"},
                "sentences": {"A": "!p & !q", "B": "(!p & !q) | (p & !q)"},
                "worlds": [],
                "narrative": "B is believed after revising by A, yet [Psi] n [Psi*A] is not within [Psi*B]",
            }
        }
    )


class RunReport(BaseModel):
    """Outcome of one exhaustive theorem check."""

    theorem: str
    title: str
    domain: str
    size: int
    instances: int
    violation_count: int = 0
    violations: List[CounterexampleReport] = Field(default_factory=list)
    findings: List[CounterexampleReport] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)
    wall_time: float = Field(default=0.0, exclude=True)

    @computed_field
    @property
    def passed(self) -> bool:
        return self.violation_count == 0
