"""
Text formats: tpos (`z | w | x y`), inputs (sentences or `{x, z}`),
counterexamples and run reports.
"""

import re
from typing import Optional

from app.config import ABSTRACT_WORLD_LABELS, DEFAULT_ATOMS
from app.errors import CapExceededError, InvalidTPOError, InvalidVocabularyError
from app.models.logic import Vocabulary, WorldSet, WorldSpace
from app.models.report import Counterexample, CounterexampleReport, RunReport
from app.models.tpo import TPO
from app.services.formula_parser import format_sentence, parse_sentence
from app.services.semantics import models, theory_of


def resolve_space(atoms: Optional[str] = None, worlds: Optional[str] = None) -> WorldSpace:
    """Propositional mode from `--atoms p,q`, abstract mode from `--worlds w,x,y,z`."""
    if atoms and worlds:
        raise InvalidVocabularyError("give either atoms or worlds, not both")
    if atoms:
        return Vocabulary.parse(atoms).space
    if worlds:
        return WorldSpace.parse(worlds)
    raise InvalidVocabularyError("a universe is needed: pass atoms or worlds")


def abstract_space(size: int) -> WorldSpace:
    """Named worlds ..., w, x, y, z for reports over bare world counts."""
    if size > len(ABSTRACT_WORLD_LABELS):
        raise CapExceededError(f"no default names for {size} worlds")
    return WorldSpace(ABSTRACT_WORLD_LABELS[len(ABSTRACT_WORLD_LABELS) - size:])


def default_vocabulary(n_atoms: int) -> Vocabulary:
    if n_atoms > len(DEFAULT_ATOMS):
        raise CapExceededError(f"no default atom names for {n_atoms} atoms")
    return Vocabulary(DEFAULT_ATOMS[:n_atoms])


def parse_tpo(text: str, space: WorldSpace) -> TPO:
    cells = []
    for position, chunk in enumerate(text.split("|"), start=1):
        labels = chunk.split()
        if not labels:
            raise InvalidTPOError(f"cell {position} of '{text}' is empty")
        cells.append(WorldSet.of((space.index(label) for label in labels), space.size))
    return TPO(tuple(cells))


def format_tpo(order: TPO, space: WorldSpace) -> str:
    return " | ".join(" ".join(space.label(x) for x in cell) for cell in order.cells)


def parse_world_set(text: str, space: WorldSpace) -> WorldSet:
    """Accepts `{x, z}`, `x,z` or `x z`; `{}` is the empty set."""
    body = text.strip()
    if body.startswith("{") and body.endswith("}"):
        body = body[1:-1]
    labels = [label for label in re.split(r"[\s,]+", body) if label]
    return WorldSet.of((space.index(label) for label in labels), space.size)


def format_world_set(worlds: WorldSet, space: WorldSpace) -> str:
    return "{" + ", ".join(space.label(x) for x in worlds) + "}"


def parse_input(text: str, space: WorldSpace) -> WorldSet:
    """A sentence in propositional mode, a world set otherwise or when braced."""
    if space.vocabulary is None or text.strip().startswith("{"):
        return parse_world_set(text, space)
    return models(parse_sentence(text, space.vocabulary), space.vocabulary)


def format_input(worlds: WorldSet, space: WorldSpace) -> str:
    if space.vocabulary is None:
        return format_world_set(worlds, space)
    return format_sentence(theory_of(worlds, space.vocabulary))


def counterexample_report(found: Counterexample, space: WorldSpace) -> CounterexampleReport:
    states = {name: format_tpo(order, space) for name, order in found.states.items()}
    return CounterexampleReport(
        postulate=found.postulate,
        atoms=list(space.vocabulary.atoms) if space.vocabulary else [],
        state=next(iter(states.values()), ""),
        states=states,
        sentences={name: format_input(worlds, space) for name, worlds in found.sentences.items()},
        worlds=[space.label(x) for x in found.worlds],
        narrative=found.narrative,
    )


def format_counterexample(report: CounterexampleReport) -> str:
    lines = [f"counterexample to {report.postulate}: {report.narrative}"]
    for name, order in report.states.items():
        lines.append(f"  {name}: {order}")
    for name, sentence in report.sentences.items():
        lines.append(f"  {name} = {sentence}")
    if report.worlds:
        names = "xyz" if len(report.worlds) <= 3 else ""
        if names:
            lines.append("  " + ", ".join(f"{n} = {w}" for n, w in zip(names, report.worlds)))
        else:
            lines.append("  worlds: " + ", ".join(report.worlds))
    return "\n".join(lines)


def format_report(report: RunReport) -> str:
    lines = [
        f"theorem: {report.theorem}  ({report.title})",
        f"domain: {report.domain}",
        f"size: {report.size}",
        f"instances: {report.instances}",
        f"violations: {report.violation_count}",
    ]
    for violation in report.violations:
        lines.append(format_counterexample(violation))
    if report.violation_count > len(report.violations):
        lines.append(f"... {report.violation_count - len(report.violations)} more not shown")
    for finding in report.findings:
        lines.append("expected " + format_counterexample(finding))
    for note in report.notes:
        lines.append(f"note: {note}")
    lines.append("result: PASS" if report.passed else "result: FAIL")
    return "\n".join(lines)
