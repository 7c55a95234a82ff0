"""
Data models for the belief-change toolkit.
"""

from .belief import BeliefState, ContractionKind, ContractionOpId, RevisionOpId
from .combinator import ASequence, Combinator, CombinatorKind, PropertyId
from .logic import Vocabulary, World, WorldSet, WorldSpace
from .report import Counterexample, CounterexampleReport, PostulateId, RunReport, TheoremId
from .tpo import TPO

__all__ = [
    "ASequence",
    "BeliefState",
    "Combinator",
    "CombinatorKind",
    "ContractionKind",
    "ContractionOpId",
    "Counterexample",
    "CounterexampleReport",
    "PostulateId",
    "PropertyId",
    "RevisionOpId",
    "RunReport",
    "TPO",
    "TheoremId",
    "Vocabulary",
    "World",
    "WorldSet",
    "WorldSpace",
]
