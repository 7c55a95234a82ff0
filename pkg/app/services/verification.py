"""
Exhaustive theorem checks.

Each registered theorem scans its whole quantification domain at a given
size and returns a RunReport; reports depend only on the arguments and the
settings, never on timing.
"""

import logging
import random
import time
from itertools import product
from typing import Callable, Dict, Iterable, List, Optional

from tqdm import tqdm

from app.config import THEOREM_CATALOG, get_settings
from app.errors import CapExceededError
from app.models.belief import BeliefState, ContractionKind, ContractionOpId, RevisionOpId
from app.models.combinator import (
    BOTH,
    FIRST,
    LEFT_BIASED,
    RIGHT_BIASED,
    SECOND,
    STQ,
    ASequence,
    Combinator,
    CombinatorKind,
    PropertyId,
)
from app.models.logic import WorldSet, WorldSpace
from app.models.report import Counterexample, PostulateId, RunReport, TheoremId
from app.models.tpo import TPO
from app.services.change_ops import (
    lexicographic_contraction_order,
    natural_contraction_order,
    priority_contraction_order,
    revised_order,
    via_combi_order,
)
from app.services.combinators import (
    check_property,
    combine,
    property_holds,
    recover_a_sequence,
    right_biased_combine,
    stq_combine,
    team_queue_combine,
)
from app.services.formula_parser import parse_sentence
from app.services.postulates import (
    REVISION_OPS,
    PostulateChecker,
    check_postulate,
    find_triviality_witnesses,
    natural_premise_violation,
    triviality_witness,
    vac_instance,
)
from app.services.semantics import models
from app.services.text_format import (
    abstract_space,
    counterexample_report,
    default_vocabulary,
    parse_tpo,
    parse_world_set,
)
from app.services.tpo_core import enumerate_tpos, find_variant_set, fubini, is_s_variant

logger = logging.getLogger(__name__)

EXAMPLE_SPACE = WorldSpace(("w", "x", "y", "z"))

AGM_REVISION = [PostulateId.parse(f"AGM*{i}") for i in range(1, 9)]
AGM_CONTRACTION = [PostulateId.parse(f"AGM/{i}") for i in range(1, 9)]


class _Run:
    """Collects counts, violations and expected counterexamples for one report."""

    def __init__(self, theorem: TheoremId, size: int, space: WorldSpace):
        self.theorem = theorem
        self.size = size
        self.space = space
        self.instances = 0
        self.violation_count = 0
        self.violations = []
        self.findings = []
        self.notes: List[str] = []
        self.limit = get_settings().max_reported_violations

    def violation(self, found: Counterexample) -> None:
        self.violation_count += 1
        logger.debug("%s violation: %s", self.theorem.value, found.narrative)
        if len(self.violations) < self.limit:
            self.violations.append(counterexample_report(found, self.space))

    def finding(self, found: Counterexample) -> None:
        self.findings.append(counterexample_report(found, self.space))

    def note(self, text: str) -> None:
        self.notes.append(text)

    def progress(self, items: Iterable, total: Optional[int] = None) -> Iterable:
        return tqdm(
            items,
            total=total,
            desc=self.theorem.value,
            leave=False,
            disable=not get_settings().show_progress,
        )

    def report(self, wall_time: float) -> RunReport:
        entry = THEOREM_CATALOG[self.theorem.value]
        return RunReport(
            theorem=self.theorem.value,
            title=entry["title"],
            domain=entry["domain"].format(size=self.size),
            size=self.size,
            instances=self.instances,
            violation_count=self.violation_count,
            violations=self.violations,
            findings=self.findings,
            notes=self.notes,
            wall_time=wall_time,
        )


def _failure(label: str, narrative: str, states: Dict[str, TPO], **sentences: WorldSet) -> Counterexample:
    return Counterexample(postulate=label, states=states, sentences=sentences, narrative=narrative)


# Operator families

def random_schedule(rng: random.Random, size: int) -> ASequence:
    tail = [rng.choice((BOTH, FIRST, SECOND)) for _ in range(rng.randint(1, max(1, size)))]
    return ASequence(tuple([BOTH] + tail))


def pair_indexed_combinator(seed: int, size: int) -> Combinator:
    """A TeamQueue combinator whose schedule is drawn afresh for every ordered pair."""

    def assignment(left: TPO, right: TPO) -> ASequence:
        return random_schedule(random.Random(f"{seed}:{left.key}:{right.key}"), size)

    return Combinator(CombinatorKind.TEAM_QUEUE, assignment=assignment, name=f"tq:pair-indexed({seed})")


def schedule_family(size: int) -> List[Combinator]:
    """STQ, both biased schedules, seeded random schedules and one pair-indexed combinator."""
    settings = get_settings()
    rng = random.Random(settings.schedule_seed)
    family = [STQ, RIGHT_BIASED, LEFT_BIASED]
    for _ in range(settings.random_schedules):
        family.append(Combinator.team_queue(random_schedule(rng, size)))
    family.append(pair_indexed_combinator(settings.schedule_seed, size))
    return family


def contraction_family() -> List[ContractionOpId]:
    family = [ContractionOpId(ContractionKind.VIA_COMBI, op, STQ) for op in REVISION_OPS]
    family += [
        ContractionOpId(ContractionKind.VIA_COMBI, RevisionOpId.LEXICOGRAPHIC, RIGHT_BIASED),
        ContractionOpId(ContractionKind.NATURAL),
        ContractionOpId(ContractionKind.LEXICOGRAPHIC),
        ContractionOpId(ContractionKind.PRIORITY),
    ]
    return family


# Propositional sweeps

def _states(size: int) -> List[BeliefState]:
    vocabulary = default_vocabulary(size)
    return [BeliefState(order, vocabulary) for order in enumerate_tpos(vocabulary)]


def _run_prop1(run: _Run) -> None:
    """Where HI holds at (Psi, A), (Psi / A, B) and LI at (Psi / A, !B), EHI at (A, !B) iff EHIC at (A, B)."""
    premised = 0
    for state in run.progress(_states(run.size)):
        for op in contraction_family():
            outer = PostulateChecker(state, op.revision, op)
            full = outer.full
            for a in outer.contractible():
                not_a = full & ~a
                if outer.c(a) != outer.k | outer.r(not_a):
                    continue
                inner = PostulateChecker(state.with_order(outer.contracted(a)), op.revision, op)
                for b in inner.contractible():
                    run.instances += 1
                    not_b = full & ~b
                    if inner.c(b) != inner.k | inner.r(not_b) or inner.r(not_b) != inner.c(b) & not_b:
                        continue
                    premised += 1
                    ehi = inner.r(not_b) == outer.r(not_b) | outer.rr(not_a, not_b)
                    ehic = inner.c(b) == outer.k | outer.r(not_b) | outer.r(not_a) | outer.rr(not_a, not_b)
                    if ehi != ehic:
                        run.violation(_failure(
                            "prop1",
                            f"{op.label}: EHI at (A, !B) is {ehi} but EHIC at (A, B) is {ehic}",
                            {"state": state.order, "contracted": outer.contracted(a)},
                            A=WorldSet(a, state.order.size), B=WorldSet(b, state.order.size),
                        ))
    run.note(f"HI/LI premises held on {premised} of {run.instances} instances")


def _run_prop2(run: _Run) -> None:
    vocabulary = default_vocabulary(run.size)
    witness = triviality_witness(vocabulary)
    run.note("witness <11 | 10 01 | 00> meets all three clauses under natural, restrained and lex revision")
    not_p = models(parse_sentence("!p", vocabulary), vocabulary)
    xor = models(parse_sentence("p <-> !q", vocabulary), vocabulary)
    for op in REVISION_OPS:
        run.instances += 2
        stq = ContractionOpId(ContractionKind.VIA_COMBI, op, STQ)
        found = check_postulate(PostulateId.EHI, witness, op, stq)
        if found is None:
            run.violation(_failure("EHI", f"expected EHI to fail for {stq.label}", {"state": witness.order}))
        else:
            run.finding(found)
        found = vac_instance(witness, op, not_p, xor)
        if found is None:
            run.violation(_failure("VAC", f"expected VAC to fail under {op.value} revision", {"state": witness.order},
                                   A=not_p, B=xor))
        elif op == RevisionOpId.LEXICOGRAPHIC:
            run.finding(found)

    team_queue = [ContractionOpId(ContractionKind.VIA_COMBI, op, c)
                  for op in REVISION_OPS for c in (STQ, RIGHT_BIASED, LEFT_BIASED)]
    for state in run.progress(_states(run.size)):
        for op in team_queue:
            checker = PostulateChecker(state, op.revision, op)
            for postulate in (PostulateId.EHI_LB, PostulateId.HI):
                run.instances += 1
                found = checker.check(postulate)
                if found is not None:
                    run.violation(found)
    witnesses = find_triviality_witnesses(vocabulary)
    run.note(f"{len(witnesses)} state(s) over p, q meet the witness clauses")


def _run_prop7(run: _Run) -> None:
    states = _states(run.size)
    for op in REVISION_OPS:
        for state in states:
            checker = PostulateChecker(state, op)
            for i in range(1, 5):
                semantic = checker.check(f"CR*{i}")
                syntactic = checker.check(f"C*{i}")
                if (semantic is None) != (syntactic is None):
                    run.violation(_failure(f"CR*{i}", f"{op.value}: CR*{i} and C*{i} verdicts disagree", {"state": state.order}))
        for combinator in run.progress(schedule_family(1 << run.size)):
            contraction = ContractionOpId(ContractionKind.VIA_COMBI, op, combinator)
            for state in states:
                checker = PostulateChecker(state, op, contraction)
                run.instances += len(checker.contractible())
                for i in range(1, 5):
                    semantic = checker.check(f"CR/{i}")
                    if semantic is not None:
                        run.violation(semantic)
                    syntactic = checker.check(f"C/{i}")
                    if (semantic is None) != (syntactic is None):
                        run.violation(_failure(f"CR/{i}", f"{contraction.label}: CR/{i} and C/{i} verdicts disagree",
                                               {"state": state.order}))


def _run_prop8(run: _Run) -> None:
    states = _states(run.size)
    for op in REVISION_OPS:
        for combinator in run.progress(schedule_family(1 << run.size)):
            contraction = ContractionOpId(ContractionKind.VIA_COMBI, op, combinator)
            for state in states:
                checker = PostulateChecker(state, op, contraction)
                run.instances += len(checker.contractible())
                found = checker.check(PostulateId.PFI)
                if found is not None:
                    run.violation(found)


def _run_prop10(run: _Run) -> None:
    lex_differs = None
    for state in run.progress(_states(run.size)):
        order = state.order
        for mask in range((1 << order.size) - 1):
            a = WorldSet(mask, order.size)
            run.instances += 1
            expected = natural_contraction_order(order, a)
            for op in (RevisionOpId.NATURAL, RevisionOpId.RESTRAINED):
                got = via_combi_order(order, a, op, STQ)
                if got != expected:
                    run.violation(_failure("prop10", f"STQ with {op.value} revision differs from natural contraction",
                                           {"state": order, "natural": expected, "combined": got}, A=a))
            lex = via_combi_order(order, a, RevisionOpId.LEXICOGRAPHIC, STQ)
            if lex_differs is None and lex != expected:
                lex_differs = _failure("prop10", "STQ-lex contraction differs from natural contraction",
                                       {"state": order, "natural": expected, "stq-lex": lex}, A=a)
    if lex_differs is None:
        run.violation(_failure("prop10", "STQ-lex contraction never differs from natural contraction", {}))
    else:
        run.finding(lex_differs)

    lex_premise = None
    for state in _states(run.size):
        for op in (RevisionOpId.NATURAL, RevisionOpId.RESTRAINED):
            found = natural_premise_violation(state.order, op)
            if found is not None:
                run.violation(found)
        if lex_premise is None:
            lex_premise = natural_premise_violation(state.order, RevisionOpId.LEXICOGRAPHIC)
    if lex_premise is None:
        run.violation(_failure("natural-premise", "lex revision never breaks the natural-contraction premise", {}))
    else:
        run.finding(lex_premise)


def _run_lex_recovery(run: _Run) -> None:
    for state in run.progress(_states(run.size)):
        order = state.order
        for mask in range(1, (1 << order.size) - 1):
            a = WorldSet(mask, order.size)
            run.instances += 1
            expected = lexicographic_contraction_order(order, a)
            got = stq_combine(
                revised_order(order, a, RevisionOpId.LEXICOGRAPHIC),
                revised_order(order, ~a, RevisionOpId.LEXICOGRAPHIC),
            )
            if got != expected:
                run.violation(_failure("lex-recovery", "STQ(lex * A, lex * !A) differs from lexicographic contraction",
                                       {"state": order, "lexicographic": expected, "combined": got}, A=a))


def _run_priority_distinctness(run: _Run) -> None:
    distinct = {"natural": None, "lexicographic": None, "stq-lex vs lexicographic": None, "stq-lex vs priority": None}
    for state in run.progress(_states(run.size)):
        order = state.order
        for mask in range((1 << order.size) - 1):
            a = WorldSet(mask, order.size)
            run.instances += 1
            priority = priority_contraction_order(order, a)
            revised = revised_order(order, ~a, RevisionOpId.LEXICOGRAPHIC)
            schedule = recover_a_sequence(order, revised, priority)
            # queue 2 must supply every cell after the first
            if schedule is None or any(SECOND - schedule.at(step) for step in range(2, len(priority.masks) + 1)):
                run.violation(_failure("priority-distinctness", "priority contraction is not a right-biased output",
                                       {"state": order, "priority": priority, "revised": revised}, A=a))
            stq_lex = via_combi_order(order, a, RevisionOpId.LEXICOGRAPHIC, STQ)
            others = {"natural": natural_contraction_order(order, a)}
            if mask:
                others["lexicographic"] = lexicographic_contraction_order(order, a)
            pairs = [("natural", priority, others["natural"])]
            if "lexicographic" in others:
                pairs += [
                    ("lexicographic", priority, others["lexicographic"]),
                    ("stq-lex vs lexicographic", stq_lex, others["lexicographic"]),
                ]
            pairs.append(("stq-lex vs priority", stq_lex, priority))
            for name, left, right in pairs:
                if distinct[name] is None and left != right:
                    distinct[name] = _failure(name, f"operators differ ({name})",
                                              {"state": order, "first": left, "second": right}, A=a)
    for name, found in distinct.items():
        if found is None:
            run.violation(_failure(name, f"no instance separates the operators ({name})", {}))
        else:
            run.finding(found)


def _run_agm(run: _Run) -> None:
    lexicographic_failures = set()
    for state in run.progress(_states(run.size)):
        for op in REVISION_OPS:
            checker = PostulateChecker(state, op)
            for postulate in AGM_REVISION:
                run.instances += 1
                found = checker.check(postulate)
                if found is not None:
                    run.violation(found)
        for contraction in contraction_family():
            checker = PostulateChecker(state, contraction.revision, contraction)
            for postulate in AGM_CONTRACTION:
                run.instances += 1
                found = checker.check(postulate)
                if found is None:
                    continue
                # lexicographic contraction is not vacuous when !A is already believed
                if contraction.kind == ContractionKind.LEXICOGRAPHIC:
                    if postulate not in lexicographic_failures:
                        lexicographic_failures.add(postulate)
                        run.finding(found)
                else:
                    run.violation(found)
    if lexicographic_failures:
        names = ", ".join(sorted(p.value for p in lexicographic_failures))
        run.note(f"lexicographic contraction fails {names} when the contracted sentence is already disbelieved")


# Combinator scans over bare world counts

def _pairs(size: int):
    orders = list(enumerate_tpos(size))
    return orders, list(product(orders, repeat=2))


def _run_prop3(run: _Run) -> None:
    orders, pairs = _pairs(run.size)
    for t1, t2 in run.progress(pairs):
        for c in orders:
            run.instances += 1
            for bound, binary in ((PropertyId.UB, PropertyId.SPU_PLUS), (PropertyId.LB, PropertyId.WPU_PLUS)):
                if property_holds(bound, t1, t2, c) != property_holds(binary, t1, t2, c):
                    run.violation(_failure(bound.value, f"{bound.value} and {binary.value} verdicts disagree",
                                           {"left": t1, "right": t2, "combined": c}))


_TEAM_QUEUE_PROPERTIES = (
    PropertyId.HI, PropertyId.SPU_PLUS, PropertyId.WPU_PLUS, PropertyId.NO,
    PropertyId.TRI, PropertyId.UB, PropertyId.LB,
)


def _run_prop4(run: _Run) -> None:
    orders, pairs = _pairs(run.size)
    family = schedule_family(run.size)
    run.note(f"{len(pairs)} pairs x {len(family)} combinators")
    for t1, t2 in run.progress(pairs):
        for combinator in family:
            run.instances += 1
            out = combine(t1, t2, combinator)
            for p in _TEAM_QUEUE_PROPERTIES:
                found = check_property(p, t1, t2, out)
                if found is not None:
                    run.violation(found)
        if run.size > 3:
            continue
        for c in orders:
            run.instances += 1
            expected = property_holds(PropertyId.HI, t1, t2, c) and property_holds(PropertyId.TRI, t1, t2, c)
            if (recover_a_sequence(t1, t2, c) is not None) != expected:
                run.violation(_failure("TeamQueue", "schedule recovery disagrees with HI + TRI",
                                       {"left": t1, "right": t2, "combined": c}))
    if run.size > 3:
        run.note("candidate recovery is only scanned up to 3 worlds")


def _variant_pairs(run: _Run):
    orders, pairs = _pairs(run.size)
    variants = [(t1, t2) for t1, t2 in pairs if find_variant_set(t1, t2) is not None]
    run.note(f"{len(variants)} of {len(pairs)} pairs are S-variants")
    return orders, variants


def _run_prop5(run: _Run) -> None:
    orders, variants = _variant_pairs(run)
    for t1, t2 in run.progress(variants):
        for c in orders:
            run.instances += 1
            if not all(property_holds(p, t1, t2, c) for p in (PropertyId.HI, PropertyId.SPU_PLUS, PropertyId.WPU_PLUS)):
                continue
            found = check_property(PropertyId.NO, t1, t2, c)
            if found is not None:
                run.violation(found)


def _run_prop6(run: _Run) -> None:
    orders, variants = _variant_pairs(run)
    for t1, t2 in run.progress(variants):
        for c in orders:
            run.instances += 1
            for plus, plain in ((PropertyId.SPU_PLUS, PropertyId.SPU), (PropertyId.WPU_PLUS, PropertyId.WPU)):
                if property_holds(plus, t1, t2, c) != property_holds(plain, t1, t2, c):
                    run.violation(_failure(plus.value, f"{plus.value} and {plain.value} verdicts disagree",
                                           {"left": t1, "right": t2, "combined": c}))


def _run_prop9(run: _Run) -> None:
    orders, pairs = _pairs(run.size)
    for t1, t2 in run.progress(pairs):
        winners = []
        for c in orders:
            run.instances += 1
            par = property_holds(PropertyId.PAR, t1, t2, c)
            if par != property_holds(PropertyId.SB, t1, t2, c):
                run.violation(_failure("PAR", "PAR and SB verdicts disagree", {"left": t1, "right": t2, "combined": c}))
            if par and property_holds(PropertyId.HI, t1, t2, c) and property_holds(PropertyId.SPU_PLUS, t1, t2, c):
                winners.append(c)
        stq = stq_combine(t1, t2)
        if winners != [stq]:
            states = {"left": t1, "right": t2, "stq": stq}
            states.update({f"candidate {i}": c for i, c in enumerate(winners, start=1)})
            run.violation(_failure("STQ", f"{len(winners)} basic SPU+/PAR candidates instead of exactly the STQ output", states))


# Worked examples

def _run_examples(run: _Run) -> None:
    space = EXAMPLE_SPACE

    def tpo(text: str) -> TPO:
        return parse_tpo(text, space)

    def expect(label: str, got, expected, states: Dict[str, TPO]) -> None:
        run.instances += 1
        if got != expected:
            run.violation(_failure(label, f"expected {expected}, got {got}", states))

    t1, t2 = tpo("z | w | x y"), tpo("x z | y | w")
    pair = {"left": t1, "right": t2}
    expect("example 1", team_queue_combine(t1, t2, ASequence.parse("12,2,1")), tpo("x z | y | w"), pair)
    expect("example 1", team_queue_combine(t1, t2, ASequence.parse("12,1")), tpo("x z | w | y"), pair)
    expect("example 1", right_biased_combine(t1, t2), tpo("x z | y | w"), pair)
    expect("example 1", str(recover_a_sequence(t1, t2, tpo("x z | y | w"))), "12,2,12", pair)

    v1, v2 = tpo("w | x | y | z"), tpo("w | x y | z")
    variants = {"left": v1, "right": v2}
    expect("example 2", is_s_variant(v1, v2, parse_world_set("{y, z}", space)), True, variants)
    expect("example 2", is_s_variant(v1, v2, parse_world_set("{x, y}", space)), False, variants)

    expect("example 3", stq_combine(t1, t2), tpo("x z | w y"), pair)
    expect("example 3", stq_combine(t2, t1), stq_combine(t1, t2), pair)

    order = tpo("x | y | z | w")
    a = parse_world_set("{x, w}", space)
    state = {"state": order}
    expect("example 4", revised_order(order, ~a, RevisionOpId.LEXICOGRAPHIC), tpo("y | z | x | w"), state)
    expect("example 4", lexicographic_contraction_order(order, a), tpo("x y | z w"), state)
    expect("example 4", via_combi_order(order, a, RevisionOpId.LEXICOGRAPHIC, STQ), tpo("x y | z | w"), state)
    expect("example 4", natural_contraction_order(order, a), tpo("x y | z | w"), state)


_RUNNERS: Dict[TheoremId, Callable[[_Run], None]] = {
    TheoremId.PROP1: _run_prop1,
    TheoremId.PROP2: _run_prop2,
    TheoremId.PROP3: _run_prop3,
    TheoremId.PROP4: _run_prop4,
    TheoremId.PROP5: _run_prop5,
    TheoremId.PROP6: _run_prop6,
    TheoremId.PROP7: _run_prop7,
    TheoremId.PROP8: _run_prop8,
    TheoremId.PROP9: _run_prop9,
    TheoremId.PROP10: _run_prop10,
    TheoremId.LEX_RECOVERY: _run_lex_recovery,
    TheoremId.PRIORITY_DISTINCTNESS: _run_priority_distinctness,
    TheoremId.AGM: _run_agm,
    TheoremId.EXAMPLES: _run_examples,
}


def _report_space(scale: str, size: int) -> WorldSpace:
    if scale == "atoms":
        return default_vocabulary(size).space
    if scale == "worlds":
        return abstract_space(size)
    return EXAMPLE_SPACE


def run_theorem(theorem: "TheoremId | str", size: Optional[int] = None) -> RunReport:
    """Run the registered exhaustive check for `theorem` at `size` worlds or atoms."""
    theorem = TheoremId.parse(theorem)
    entry = THEOREM_CATALOG[theorem.value]
    settings = get_settings()
    scale = entry["scale"]
    if scale == "fixed" or size is None:
        size = entry["default_size"]
    limit = {"worlds": settings.max_worlds, "atoms": settings.max_sweep_atoms}.get(scale, size)
    if not 1 <= size <= limit:
        raise CapExceededError(f"{theorem.value} accepts sizes 1..{limit} {scale}; raise TQBC_MAX_WORLDS for more")

    run = _Run(theorem, size, _report_space(scale, size))
    if scale == "worlds":
        run.note(f"{fubini(size)} orders over {size} worlds")
    started = time.perf_counter()
    _RUNNERS[theorem](run)
    wall_time = time.perf_counter() - started
    logger.info(
        "%s size=%d instances=%d violations=%d in %.2fs",
        theorem.value, size, run.instances, run.violation_count, wall_time,
    )
    return run.report(wall_time)
