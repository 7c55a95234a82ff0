"""
Postulate checkers.

Belief sets are handled through their model sets, so inclusion between
belief sets reverses into inclusion between world sets. Sentence variables
range over every nonempty world set in ascending encoding; the first failing
instance is reported.

A contraction by a tautology, or by an input the operator does not admit,
leaves the belief set [Psi] in place (its Harper value).
"""

import logging
from typing import Callable, Dict, List, Optional, Tuple

from app.errors import InvalidVocabularyError, OperatorMismatchError, WitnessVerificationError
from app.models.belief import BeliefState, ContractionOpId, RevisionOpId
from app.models.logic import Not, Vocabulary, WorldSet
from app.models.report import Counterexample, PostulateId
from app.models.tpo import TPO
from app.services.change_ops import contracted_order, revised_order, strongly_believed_in
from app.services.formula_parser import parse_sentence
from app.services.semantics import models, theory_of
from app.services.tpo_core import enumerate_tpos, min_mask

logger = logging.getLogger(__name__)

REVISION_OPS = (RevisionOpId.NATURAL, RevisionOpId.RESTRAINED, RevisionOpId.LEXICOGRAPHIC)


class PostulateChecker:
    """
    Checks postulates for one state under a revision and, optionally, a
    contraction operator. Derived orders are cached per instance.
    """

    def __init__(
        self,
        state: BeliefState,
        revision: RevisionOpId = RevisionOpId.LEXICOGRAPHIC,
        contraction: Optional[ContractionOpId] = None,
    ):
        self.state = state
        self.order = state.order
        self.revision_op = RevisionOpId.parse(revision)
        self.contraction_op = contraction
        self.size = self.order.size
        self.full = (1 << self.size) - 1
        self.k = self.order.masks[0]
        self.sets = range(1, self.full + 1)
        self._revised: Dict[int, TPO] = {}
        self._contracted: Dict[int, Optional[TPO]] = {}
        self._cache: Dict[Tuple, int] = {}

    # derived orders and belief sets

    def revised(self, a: int) -> TPO:
        if a not in self._revised:
            self._revised[a] = revised_order(self.order, self._ws(a), self.revision_op)
        return self._revised[a]

    def admits(self, a: int) -> bool:
        return self.contraction_op.admits(self._ws(a))

    def contracted(self, a: int) -> Optional[TPO]:
        if a not in self._contracted:
            self._contracted[a] = (
                contracted_order(self.order, self._ws(a), self.contraction_op) if self.admits(a) else None
            )
        return self._contracted[a]

    def r(self, a: int) -> int:
        """[Psi * A]"""
        return self.revised(a).masks[0]

    def c(self, a: int) -> int:
        """[Psi / A]"""
        order = self.contracted(a)
        return self.k if order is None else order.masks[0]

    def rr(self, a: int, b: int) -> int:
        """[(Psi * A) * B]"""
        key = ("rr", a, b)
        if key not in self._cache:
            self._cache[key] = revised_order(self.revised(a), self._ws(b), self.revision_op).masks[0]
        return self._cache[key]

    def cr(self, a: int, b: int) -> int:
        """[(Psi / A) * B]"""
        key = ("cr", a, b)
        if key not in self._cache:
            self._cache[key] = revised_order(self.contracted(a), self._ws(b), self.revision_op).masks[0]
        return self._cache[key]

    def cc(self, a: int, b: int) -> int:
        """[(Psi / A) / B]"""
        key = ("cc", a, b)
        if key not in self._cache:
            inner = self.contracted(a)
            if inner is None or not self.admits(b):
                self._cache[key] = self.c(a)
            else:
                self._cache[key] = contracted_order(inner, self._ws(b), self.contraction_op).masks[0]
        return self._cache[key]

    def contractible(self) -> List[int]:
        return [a for a in self.sets if self.admits(a)]

    def _ws(self, mask: int) -> WorldSet:
        return WorldSet(mask, self.size)

    def _fail(self, postulate: PostulateId, narrative: str, worlds: Tuple[int, ...] = (),
              extra: Optional[Dict[str, TPO]] = None, **sentences: int) -> Counterexample:
        states = {"state": self.order}
        states.update(extra or {})
        return Counterexample(
            postulate=postulate.value,
            states=states,
            sentences={name: self._ws(mask) for name, mask in sentences.items()},
            worlds=worlds,
            narrative=narrative,
        )

    # dispatch

    def check(self, postulate: "PostulateId | str") -> Optional[Counterexample]:
        postulate = PostulateId.parse(postulate)
        if postulate.needs_contraction and self.contraction_op is None:
            raise OperatorMismatchError(f"{postulate.value} needs a contraction operator")
        return self._CHECKS[postulate](self)

    # AGM revision

    def _closure(self, postulate: PostulateId, belief: Callable[[int], int], inputs) -> Optional[Counterexample]:
        vocabulary = self.state.vocabulary
        if vocabulary is None:
            return None
        for a in inputs:
            b = belief(a)
            if models(theory_of(self._ws(b), vocabulary), vocabulary).mask != b:
                return self._fail(postulate, "belief set is not closed under consequence", A=a)
        return None

    def _extensionality(self, postulate: PostulateId, belief: Callable[[int], int], inputs) -> Optional[Counterexample]:
        vocabulary = self.state.vocabulary
        if vocabulary is None:
            return None
        for a in inputs:
            plain = theory_of(self._ws(a), vocabulary)
            variant = Not(Not(plain))
            first = belief(models(plain, vocabulary).mask)
            second = belief(models(variant, vocabulary).mask)
            if first != second:
                return self._fail(postulate, "equivalent inputs give different belief sets", A=a)
        return None

    def agm_r1(self):
        return self._closure(PostulateId.AGM_R1, self.r, self.sets)

    def agm_r2(self):
        for a in self.sets:
            if self.r(a) & ~a:
                return self._fail(PostulateId.AGM_R2, "A is not believed after revising by A", A=a)
        return None

    def agm_r3(self):
        for a in self.sets:
            if self.k & a & ~self.r(a):
                return self._fail(PostulateId.AGM_R3, "[Psi * A] is not within Cn([Psi] + A)", A=a)
        return None

    def agm_r4(self):
        for a in self.sets:
            if self.k & a and self.r(a) & ~(self.k & a):
                return self._fail(PostulateId.AGM_R4, "A is consistent with [Psi] but Cn([Psi] + A) is not within [Psi * A]", A=a)
        return None

    def agm_r5(self):
        for a in self.sets:
            if not self.r(a):
                return self._fail(PostulateId.AGM_R5, "revising by a consistent A gives an inconsistent belief set", A=a)
        return None

    def agm_r6(self):
        return self._extensionality(PostulateId.AGM_R6, self.r, self.sets)

    def agm_r7(self):
        for a in self.sets:
            for b in self.sets:
                if a & b and self.r(a) & b & ~self.r(a & b):
                    return self._fail(PostulateId.AGM_R7, "[Psi * (A & B)] is not within Cn([Psi * A] + B)", A=a, B=b)
        return None

    def agm_r8(self):
        for a in self.sets:
            for b in self.sets:
                joint = self.r(a) & b
                if joint and self.r(a & b) & ~joint:
                    return self._fail(PostulateId.AGM_R8, "!B is not in [Psi * A] but Cn([Psi * A] + B) is not within [Psi * (A & B)]", A=a, B=b)
        return None

    # AGM contraction

    def agm_c1(self):
        return self._closure(PostulateId.AGM_C1, self.c, self.sets)

    def agm_c2(self):
        for a in self.sets:
            if self.k & ~self.c(a):
                return self._fail(PostulateId.AGM_C2, "[Psi / A] is not within [Psi]", A=a)
        return None

    def agm_c3(self):
        for a in self.sets:
            if self.k & ~a and self.c(a) != self.k:
                return self._fail(PostulateId.AGM_C3, "A is not believed, yet contracting by A changes the belief set", A=a)
        return None

    def agm_c4(self):
        for a in self.sets:
            if a != self.full and self.c(a) & ~a == 0:
                return self._fail(PostulateId.AGM_C4, "A is not a tautology but is still believed after contracting by A", A=a)
        return None

    def agm_c5(self):
        for a in self.sets:
            if self.k & ~a == 0 and self.c(a) & a & ~self.k:
                return self._fail(PostulateId.AGM_C5, "[Psi] is not within Cn([Psi / A] + A)", A=a)
        return None

    def agm_c6(self):
        return self._extensionality(PostulateId.AGM_C6, self.c, self.sets)

    def agm_c7(self):
        for a in self.sets:
            for b in self.sets:
                if self.c(a & b) & ~(self.c(a) | self.c(b)):
                    return self._fail(PostulateId.AGM_C7, "[Psi / A] n [Psi / B] is not within [Psi / (A & B)]", A=a, B=b)
        return None

    def agm_c8(self):
        for a in self.sets:
            for b in self.sets:
                both = self.c(a & b)
                if both & ~a and self.c(a) & ~both:
                    return self._fail(PostulateId.AGM_C8, "A is not in [Psi / (A & B)] but [Psi / (A & B)] is not within [Psi / A]", A=a, B=b)
        return None

    # identities

    def harper(self):
        for a in self.sets:
            if a == self.full:
                continue
            expected = self.k | self.r(self.full & ~a)
            if self.c(a) != expected:
                return self._fail(PostulateId.HI, "[Psi / A] differs from [Psi] n [Psi * !A]", A=a)
        return None

    def levi(self):
        for a in self.sets:
            if self.r(a) != self.c(self.full & ~a) & a:
                return self._fail(PostulateId.LI, "[Psi * A] differs from Cn([Psi / !A] + A)", A=a)
        return None

    def _ehi_pairs(self):
        for a in self.contractible():
            for b in self.sets:
                yield a, b, self.r(b) | self.rr(self.full & ~a, b)

    def ehi(self):
        for a, b, union in self._ehi_pairs():
            if self.cr(a, b) != union:
                return self._fail(PostulateId.EHI, "[(Psi / A) * B] differs from [Psi * B] n [(Psi * !A) * B]",
                                  extra={"contracted": self.contracted(a)}, A=a, B=b)
        return None

    def ehi_lb(self):
        for a, b, union in self._ehi_pairs():
            if self.cr(a, b) & ~union:
                return self._fail(PostulateId.EHI_LB, "[Psi * B] n [(Psi * !A) * B] is not within [(Psi / A) * B]",
                                  extra={"contracted": self.contracted(a)}, A=a, B=b)
        return None

    def ehi_ub(self):
        for a, b, union in self._ehi_pairs():
            believed = self.cr(a, b)
            # sentences C believed after (Psi / A) * B are the supersets of its models
            for c in self.sets:
                if believed & ~c == 0 and union & ~c:
                    return self._fail(PostulateId.EHI_UB, "C is in [(Psi / A) * B] but not in [Psi * B] n [(Psi * !A) * B]",
                                      extra={"contracted": self.contracted(a)}, A=a, B=b, C=c)
        return None

    def ehi_sb(self):
        for a, b, union in self._ehi_pairs():
            if not strongly_believed_in(self.contracted(a), self.full & ~b):
                continue
            if union & ~self.cr(a, b):
                return self._fail(PostulateId.EHI_SB, "!B is strongly believed in Psi / A, yet [(Psi / A) * B] is not within [Psi * B] n [(Psi * !A) * B]",
                                  extra={"contracted": self.contracted(a)}, A=a, B=b)
        return None

    def ehic(self):
        for a in self.contractible():
            not_a = self.full & ~a
            for b in self.contractible():
                not_b = self.full & ~b
                expected = self.k | self.r(not_b) | self.r(not_a) | self.rr(not_a, not_b)
                if self.cc(a, b) != expected:
                    return self._fail(PostulateId.EHIC, "[(Psi / A) / B] differs from [Psi] n [Psi * !B] n [Psi * !A] n [(Psi * !A) * !B]",
                                      extra={"contracted": self.contracted(a)}, A=a, B=b)
        return None

    def vac(self):
        for a in self.sets:
            for b in self.sets:
                found = self.vac_instance(a, b)
                if found is not None:
                    return found
        return None

    def vac_instance(self, a: int, b: int) -> Optional[Counterexample]:
        if not a or self.r(a) & ~b:
            return None
        if self.r(b) & ~(self.k | self.r(a)):
            return self._fail(PostulateId.VAC, "B is in [Psi * A], yet [Psi] n [Psi * A] is not within [Psi * B]", A=a, B=b)
        return None

    # iterated revision

    def _c_star(self, postulate: PostulateId, premise: Callable[[int, int], bool], holds: Callable[[int, int], bool], narrative: str):
        for a in self.sets:
            for b in self.sets:
                if premise(a, b) and not holds(a, b):
                    return self._fail(postulate, narrative, extra={"revised": self.revised(a)}, A=a, B=b)
        return None

    def c_r1(self):
        return self._c_star(PostulateId.C_R1, lambda a, b: b & ~a == 0, lambda a, b: self.rr(a, b) == self.r(b),
                            "B entails A, yet [(Psi * A) * B] differs from [Psi * B]")

    def c_r2(self):
        return self._c_star(PostulateId.C_R2, lambda a, b: b & a == 0, lambda a, b: self.rr(a, b) == self.r(b),
                            "B entails !A, yet [(Psi * A) * B] differs from [Psi * B]")

    def c_r3(self):
        return self._c_star(PostulateId.C_R3, lambda a, b: self.r(b) & ~a == 0, lambda a, b: self.rr(a, b) & ~a == 0,
                            "A is in [Psi * B] but not in [(Psi * A) * B]")

    def c_r4(self):
        return self._c_star(PostulateId.C_R4, lambda a, b: self.r(b) & a != 0, lambda a, b: self.rr(a, b) & a != 0,
                            "!A is not in [Psi * B] but is in [(Psi * A) * B]")

    def _cr_pairs(self, postulate: PostulateId, inputs, after: Callable[[int], TPO], first_inside: bool,
                  second_inside: bool, test: Callable[[int, int, int, int], bool], narrative: str, label: str):
        ranks = self.order.ranks
        for a in inputs:
            new = after(a).ranks
            for x in range(self.size):
                if bool(a >> x & 1) != first_inside:
                    continue
                for y in range(self.size):
                    if bool(a >> y & 1) != second_inside:
                        continue
                    if not test(ranks[x], ranks[y], new[x], new[y]):
                        return self._fail(postulate, narrative, worlds=(x, y), extra={label: after(a)}, A=a)
        return None

    def cr_r1(self):
        return self._cr_pairs(PostulateId.CR_R1, self.sets, self.revised, True, True,
                              lambda ox, oy, nx, ny: (ox <= oy) == (nx <= ny),
                              "x, y are A-worlds whose relative order changes after revising by A", "revised")

    def cr_r2(self):
        return self._cr_pairs(PostulateId.CR_R2, self.sets, self.revised, False, False,
                              lambda ox, oy, nx, ny: (ox <= oy) == (nx <= ny),
                              "x, y are !A-worlds whose relative order changes after revising by A", "revised")

    def cr_r3(self):
        return self._cr_pairs(PostulateId.CR_R3, self.sets, self.revised, True, False,
                              lambda ox, oy, nx, ny: not ox < oy or nx < ny,
                              "A-world x was strictly below !A-world y but is not after revising by A", "revised")

    def cr_r4(self):
        return self._cr_pairs(PostulateId.CR_R4, self.sets, self.revised, True, False,
                              lambda ox, oy, nx, ny: not ox <= oy or nx <= ny,
                              "A-world x was weakly below !A-world y but is not after revising by A", "revised")

    # iterated contraction

    def _c_contract(self, postulate: PostulateId, premise: Callable[[int, int], bool], holds: Callable[[int, int], bool], narrative: str):
        for a in self.contractible():
            for b in self.sets:
                if premise(a, b) and not holds(a, b):
                    return self._fail(postulate, narrative, extra={"contracted": self.contracted(a)}, A=a, B=b)
        return None

    def c_c1(self):
        return self._c_contract(PostulateId.C_C1, lambda a, b: b & a == 0, lambda a, b: self.cr(a, b) == self.r(b),
                                "B entails !A, yet [(Psi / A) * B] differs from [Psi * B]")

    def c_c2(self):
        return self._c_contract(PostulateId.C_C2, lambda a, b: b & ~a == 0, lambda a, b: self.cr(a, b) == self.r(b),
                                "B entails A, yet [(Psi / A) * B] differs from [Psi * B]")

    def c_c3(self):
        return self._c_contract(PostulateId.C_C3, lambda a, b: self.r(b) & a == 0, lambda a, b: self.cr(a, b) & a == 0,
                                "!A is in [Psi * B] but not in [(Psi / A) * B]")

    def c_c4(self):
        return self._c_contract(PostulateId.C_C4, lambda a, b: self.r(b) & ~a != 0, lambda a, b: self.cr(a, b) & ~a != 0,
                                "A is not in [Psi * B] but is in [(Psi / A) * B]")

    def cr_c1(self):
        return self._cr_pairs(PostulateId.CR_C1, self.contractible(), self.contracted, False, False,
                              lambda ox, oy, nx, ny: (ox <= oy) == (nx <= ny),
                              "x, y are !A-worlds whose relative order changes after contracting by A", "contracted")

    def cr_c2(self):
        return self._cr_pairs(PostulateId.CR_C2, self.contractible(), self.contracted, True, True,
                              lambda ox, oy, nx, ny: (ox <= oy) == (nx <= ny),
                              "x, y are A-worlds whose relative order changes after contracting by A", "contracted")

    def cr_c3(self):
        return self._cr_pairs(PostulateId.CR_C3, self.contractible(), self.contracted, False, True,
                              lambda ox, oy, nx, ny: not ox < oy or nx < ny,
                              "!A-world x was strictly below A-world y but is not after contracting by A", "contracted")

    def cr_c4(self):
        return self._cr_pairs(PostulateId.CR_C4, self.contractible(), self.contracted, False, True,
                              lambda ox, oy, nx, ny: not ox <= oy or nx <= ny,
                              "!A-world x was weakly below A-world y but is not after contracting by A", "contracted")

    def pfi(self):
        full = self.full
        for a in self.contractible():
            if a == full:
                continue
            not_a = full & ~a
            for b in self.sets:
                if b == full or self.c(a) & ~b:
                    continue
                result = self.cc(a, b)
                a_or_b = self.c(a | b)
                not_a_or_b = self.c(not_a | b)
                # (a) and (c) both apply when the result still entails B
                clauses = []
                if result & ~(b | not_a) == 0:
                    clauses.append(("a", self.c(a) | a_or_b))
                if result & ~(b | a) == 0:
                    clauses.append(("c", self.c(a) | not_a_or_b))
                if not clauses:
                    clauses.append(("b", self.c(a) | a_or_b | not_a_or_b))
                for clause, expected in clauses:
                    if result != expected:
                        return self._fail(PostulateId.PFI, f"clause ({clause}) fails: [(Psi / A) / B] is not the factored intersection",
                                          extra={"contracted": self.contracted(a)}, A=a, B=b)
        return None

    _CHECKS = {
        PostulateId.AGM_R1: agm_r1,
        PostulateId.AGM_R2: agm_r2,
        PostulateId.AGM_R3: agm_r3,
        PostulateId.AGM_R4: agm_r4,
        PostulateId.AGM_R5: agm_r5,
        PostulateId.AGM_R6: agm_r6,
        PostulateId.AGM_R7: agm_r7,
        PostulateId.AGM_R8: agm_r8,
        PostulateId.AGM_C1: agm_c1,
        PostulateId.AGM_C2: agm_c2,
        PostulateId.AGM_C3: agm_c3,
        PostulateId.AGM_C4: agm_c4,
        PostulateId.AGM_C5: agm_c5,
        PostulateId.AGM_C6: agm_c6,
        PostulateId.AGM_C7: agm_c7,
        PostulateId.AGM_C8: agm_c8,
        PostulateId.HI: harper,
        PostulateId.LI: levi,
        PostulateId.EHI: ehi,
        PostulateId.EHI_LB: ehi_lb,
        PostulateId.EHI_UB: ehi_ub,
        PostulateId.EHI_SB: ehi_sb,
        PostulateId.EHIC: ehic,
        PostulateId.VAC: vac,
        PostulateId.C_R1: c_r1,
        PostulateId.C_R2: c_r2,
        PostulateId.C_R3: c_r3,
        PostulateId.C_R4: c_r4,
        PostulateId.CR_R1: cr_r1,
        PostulateId.CR_R2: cr_r2,
        PostulateId.CR_R3: cr_r3,
        PostulateId.CR_R4: cr_r4,
        PostulateId.C_C1: c_c1,
        PostulateId.C_C2: c_c2,
        PostulateId.C_C3: c_c3,
        PostulateId.C_C4: c_c4,
        PostulateId.CR_C1: cr_c1,
        PostulateId.CR_C2: cr_c2,
        PostulateId.CR_C3: cr_c3,
        PostulateId.CR_C4: cr_c4,
        PostulateId.PFI: pfi,
    }


def check_postulate(
    postulate: "PostulateId | str",
    state: BeliefState,
    revision: "RevisionOpId | str" = RevisionOpId.LEXICOGRAPHIC,
    contraction: Optional[ContractionOpId] = None,
) -> Optional[Counterexample]:
    """First counterexample to the postulate for this state, or None if it holds."""
    return PostulateChecker(state, revision, contraction).check(postulate)


def check_vac(state: BeliefState, revision: "RevisionOpId | str" = RevisionOpId.LEXICOGRAPHIC) -> Optional[Counterexample]:
    return PostulateChecker(state, revision).check(PostulateId.VAC)


def _triviality_sentences(vocabulary: Vocabulary) -> Dict[str, int]:
    if set(vocabulary.atoms) != {"p", "q"}:
        raise InvalidVocabularyError("the triviality witness is stated over the atoms p and q")
    return {
        text: models(parse_sentence(text, vocabulary), vocabulary).mask
        for text in ("p & q", "!p", "!p & q", "p <-> !q", "!p & !q")
    }


def _meets_triviality_clauses(order: TPO, masks: Dict[str, int]) -> bool:
    if order.masks[0] != masks["p & q"]:
        return False
    for op in REVISION_OPS:
        if revised_order(order, WorldSet(masks["!p"], order.size), op).masks[0] != masks["!p & q"]:
            return False
        if revised_order(order, WorldSet(masks["p <-> !q"], order.size), op).masks[0] != masks["p <-> !q"]:
            return False
    return True


def triviality_witness(vocabulary: Vocabulary) -> BeliefState:
    """
    The state <{11}, {10, 01}, {00}>: believes p & q, moves to !p & q on
    learning !p, and to exactly p <-> !q on learning p <-> !q, under every
    revision operator.
    """
    masks = _triviality_sentences(vocabulary)
    size = vocabulary.n_worlds
    middle = masks["p <-> !q"]
    order = TPO.from_masks([masks["p & q"], middle, masks["!p & !q"]], size)
    if not _meets_triviality_clauses(order, masks):
        raise WitnessVerificationError("witness state fails its defining clauses")
    return BeliefState(order, vocabulary)


def find_triviality_witnesses(vocabulary: Vocabulary) -> List[BeliefState]:
    """Every state over p, q meeting the three witness clauses."""
    masks = _triviality_sentences(vocabulary)
    found = [
        BeliefState(order, vocabulary)
        for order in enumerate_tpos(vocabulary)
        if _meets_triviality_clauses(order, masks)
    ]
    logger.info("%d triviality witnesses over %s", len(found), ",".join(vocabulary.atoms))
    return found


def vac_instance(state: BeliefState, revision: "RevisionOpId | str", a: WorldSet, b: WorldSet) -> Optional[Counterexample]:
    """Check the vacuity principle at one (A, B) pair."""
    return PostulateChecker(state, revision).vac_instance(a.mask, b.mask)


def natural_premise_violation(order: TPO, revision: RevisionOpId) -> Optional[Counterexample]:
    """
    First (A, x, y) where x, y are outside min(order, A), x < y, but x < y
    fails after revising by A.
    """
    size = order.size
    ranks = order.ranks
    for a in range(1, 1 << size):
        best = min_mask(order, a)
        new = revised_order(order, WorldSet(a, size), revision).ranks
        for x in range(size):
            for y in range(size):
                if best >> x & 1 or best >> y & 1:
                    continue
                if ranks[x] < ranks[y] and not new[x] < new[y]:
                    return Counterexample(
                        postulate="natural-premise",
                        states={"state": order, "revised": revised_order(order, WorldSet(a, size), revision)},
                        sentences={"A": WorldSet(a, size)},
                        worlds=(x, y),
                        narrative="x < y outside min(A), but not after revising by A",
                    )
    return None
