"""
Request and response models for the HTTP API.
"""

from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field

from app.models.report import CounterexampleReport


class UniverseRequest(BaseModel):
    """Either `atoms` (propositional mode) or `worlds` (abstract mode), comma separated."""

    atoms: Optional[str] = Field(default=None, description="e.g. p,q")
    worlds: Optional[str] = Field(default=None, description="e.g. w,x,y,z")


class CombineRequest(UniverseRequest):
    left: str = Field(..., description="Order as cells separated by '|'")
    right: str
    combinator: str = Field(default="stq", description="stq, right-biased or tq:<schedule>")

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "worlds": "w,x,y,z",
                "left": "z | w | x y",
                "right": "x z | y | w",
                "combinator": "tq:12,2,1",
            }
        }
    )


class RevisionRequest(UniverseRequest):
    state: str
    input: str = Field(..., description="Sentence, or a world set such as {x, z}")
    op: str = Field(default="lex", description="natural, restrained or lex")


class ContractionRequest(UniverseRequest):
    state: str
    input: str
    op: str = Field(default="via-combi", description="via-combi, natural, lex or priority")
    revision: str = "lex"
    combinator: str = "stq"

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "worlds": "w,x,y,z",
                "state": "x | y | z | w",
                "input": "{x, w}",
                "op": "via-combi",
                "revision": "lex",
                "combinator": "stq",
            }
        }
    )


class PropertyCheckRequest(UniverseRequest):
    property: str
    left: str
    right: str
    combined: str


class PostulateCheckRequest(UniverseRequest):
    postulate: str
    state: str
    revision: str = "lex"
    contraction: Optional[str] = Field(default=None, description="Required for contraction postulates")
    combinator: str = "stq"


class VerifyRequest(BaseModel):
    theorem: str
    size: Optional[int] = Field(default=None, ge=1)


class OrderResponse(BaseModel):
    order: str
    belief_set: str
    schedule: Optional[str] = None


class CheckResponse(BaseModel):
    holds: bool
    counterexample: Optional[CounterexampleReport] = None


class TheoremInfo(BaseModel):
    theorem: str
    title: str
    scale: str
    default_size: int
    domain: str
    aliases: List[str] = Field(default_factory=list)
