"""
TeamQueue combination, schedule recovery and combinator-property checks.
"""

import logging
from itertools import product
from typing import Callable, Dict, Optional, Tuple

from app.errors import InvalidScheduleError, InvalidTPOError
from app.models.combinator import (
    RIGHT_BIASED_SCHEDULE,
    SYNCHRONOUS_SCHEDULE,
    ASequence,
    Combinator,
    PropertyId,
)
from app.models.logic import WorldSet
from app.models.report import Counterexample
from app.models.tpo import TPO
from app.services.tpo_core import min_mask

logger = logging.getLogger(__name__)


def team_queue_combine(t1: TPO, t2: TPO, a: ASequence) -> TPO:
    """
    Build T_1, T_2, ... where T_i is the union, over the queues j in a(i),
    of the most plausible worlds of queue j not yet placed.
    """
    if t1.size != t2.size:
        raise InvalidTPOError("orders range over different universes")
    queues = {1: t1, 2: t2}
    remaining = (1 << t1.size) - 1
    cells = []
    step = 1
    while remaining:
        cell = 0
        for j in a.at(step):
            cell |= min_mask(queues[j], remaining)
        cells.append(cell)
        remaining &= ~cell
        step += 1
    return TPO.from_masks(cells, t1.size)


def combine(t1: TPO, t2: TPO, combinator: Combinator) -> TPO:
    return team_queue_combine(t1, t2, combinator.schedule_for(t1, t2))


def stq_combine(t1: TPO, t2: TPO) -> TPO:
    return team_queue_combine(t1, t2, SYNCHRONOUS_SCHEDULE)


def right_biased_combine(t1: TPO, t2: TPO) -> TPO:
    return team_queue_combine(t1, t2, RIGHT_BIASED_SCHEDULE)


def recover_a_sequence(t1: TPO, t2: TPO, combined: TPO) -> Optional[ASequence]:
    """
    Read a schedule off a candidate output, or None if it is not a
    TeamQueue output for this pair.

    Queue j belongs to a(i) iff its minimum over the unplaced worlds lies
    inside S_i. The schedule is kept only if replaying it gives `combined`.
    """
    queues = {1: t1, 2: t2}
    remaining = (1 << combined.size) - 1
    cells = []
    for cell in combined.masks:
        chosen = frozenset(j for j, t in queues.items() if min_mask(t, remaining) & ~cell == 0)
        if not chosen:
            return None
        cells.append(chosen)
        remaining &= ~cell
    try:
        schedule = ASequence(tuple(cells))
    except InvalidScheduleError:
        return None
    if team_queue_combine(t1, t2, schedule) != combined:
        logger.debug("schedule %s does not replay to the candidate", schedule)
        return None
    return schedule


# Property finders return the first violating instance or None.
# Instances are ("S", mask) for set-quantified properties and a tuple of
# world indices (plus the queue pair for NO, the queue for PAR) otherwise.

def _find_hi(t1: TPO, t2: TPO, c: TPO):
    full = (1 << c.size) - 1
    if c.masks[0] != t1.masks[0] | t2.masks[0]:
        return ("S", full)
    return None


def _scan_sets(t1: TPO, t2: TPO, c: TPO, holds: Callable[[int, int, int], bool]):
    for s in range(1, 1 << c.size):
        if not holds(min_mask(t1, s), min_mask(t2, s), min_mask(c, s)):
            return ("S", s)
    return None


def _find_ehi(t1, t2, c):
    return _scan_sets(t1, t2, c, lambda m1, m2, mc: mc == m1 | m2)


def _find_ub(t1, t2, c):
    return _scan_sets(t1, t2, c, lambda m1, m2, mc: mc & ~(m1 | m2) == 0)


def _find_lb(t1, t2, c):
    return _scan_sets(t1, t2, c, lambda m1, m2, mc: m1 & ~mc == 0 or m2 & ~mc == 0)


def _find_tri(t1, t2, c):
    return _scan_sets(t1, t2, c, lambda m1, m2, mc: mc in (m1, m2, m1 | m2))


def _find_sb(t1: TPO, t2: TPO, c: TPO):
    rc = c.ranks
    size = c.size
    for s in range(1, 1 << size):
        inside = [y for y in range(size) if s >> y & 1]
        outside = [x for x in range(size) if not s >> x & 1]
        if outside and max(rc[x] for x in outside) >= min(rc[y] for y in inside):
            continue
        required = min_mask(t1, s) | min_mask(t2, s)
        if required & ~min_mask(c, s):
            return ("S", s)
    return None


def _find_spu_plus(t1: TPO, t2: TPO, c: TPO):
    r1, r2, rc = t1.ranks, t2.ranks, c.ranks
    n = c.size
    for x, y, z in product(range(n), repeat=3):
        if r1[x] < r1[y] and r2[z] < r2[y] and not (rc[x] < rc[y] or rc[z] < rc[y]):
            return (x, y, z)
    return None


def _find_wpu_plus(t1: TPO, t2: TPO, c: TPO):
    r1, r2, rc = t1.ranks, t2.ranks, c.ranks
    n = c.size
    for x, y, z in product(range(n), repeat=3):
        if r1[x] <= r1[y] and r2[z] <= r2[y] and not (rc[x] <= rc[y] or rc[z] <= rc[y]):
            return (x, y, z)
    return None


def _find_spu(t1: TPO, t2: TPO, c: TPO):
    r1, r2, rc = t1.ranks, t2.ranks, c.ranks
    for x, y in product(range(c.size), repeat=2):
        if r1[x] < r1[y] and r2[x] < r2[y] and not rc[x] < rc[y]:
            return (x, y)
    return None


def _find_wpu(t1: TPO, t2: TPO, c: TPO):
    r1, r2, rc = t1.ranks, t2.ranks, c.ranks
    for x, y in product(range(c.size), repeat=2):
        if r1[x] <= r1[y] and r2[x] <= r2[y] and not rc[x] <= rc[y]:
            return (x, y)
    return None


def _find_no(t1: TPO, t2: TPO, c: TPO):
    ranks = {1: t1.ranks, 2: t2.ranks}
    rc = c.ranks
    n = c.size
    for x, y, z in product(range(n), repeat=3):
        for i, j in ((1, 2), (2, 1)):
            ri, rj = ranks[i], ranks[j]
            if ri[x] < ri[y] and rj[z] <= rj[y] and not (rc[x] < rc[y] or rc[z] <= rc[y]):
                return (x, y, z, i, j)
    return None


def _find_par(t1: TPO, t2: TPO, c: TPO):
    ranks = {1: t1.ranks, 2: t2.ranks}
    rc = c.ranks
    n = c.size
    for x, y in product(range(n), repeat=2):
        if not rc[x] < rc[y]:
            continue
        for i in (1, 2):
            ri = ranks[i]
            if not any(rc[z] == rc[x] and ri[z] < ri[y] for z in range(n)):
                return (x, y, i)
    return None


_FINDERS: Dict[PropertyId, Callable] = {
    PropertyId.HI: _find_hi,
    PropertyId.EHI: _find_ehi,
    PropertyId.UB: _find_ub,
    PropertyId.LB: _find_lb,
    PropertyId.SPU: _find_spu,
    PropertyId.WPU: _find_wpu,
    PropertyId.SPU_PLUS: _find_spu_plus,
    PropertyId.WPU_PLUS: _find_wpu_plus,
    PropertyId.NO: _find_no,
    PropertyId.TRI: _find_tri,
    PropertyId.PAR: _find_par,
    PropertyId.SB: _find_sb,
}

_NARRATIVES = {
    PropertyId.HI: "min(combined, W) differs from min(left, W) u min(right, W)",
    PropertyId.EHI: "min(combined, S) differs from min(left, S) u min(right, S)",
    PropertyId.UB: "min(combined, S) is not within min(left, S) u min(right, S)",
    PropertyId.LB: "min(combined, S) contains neither min(left, S) nor min(right, S)",
    PropertyId.TRI: "min(combined, S) is none of min(left, S), min(right, S) or their union",
    PropertyId.SB: "S^c lies strictly below S in combined, yet min(left, S) u min(right, S) is not within min(combined, S)",
    PropertyId.SPU: "x < y in both inputs but not in combined",
    PropertyId.WPU: "x <= y in both inputs but not in combined",
    PropertyId.SPU_PLUS: "x <_1 y and z <_2 y, yet neither x nor z is strictly below y in combined",
    PropertyId.WPU_PLUS: "x <=_1 y and z <=_2 y, yet neither x nor z is weakly below y in combined",
    PropertyId.NO: "x <_i y and z <=_j y, yet combined has neither x < y nor z <= y",
    PropertyId.PAR: "x < y in combined, but no z tied with x in combined lies strictly below y in queue i",
}


def property_holds(p: PropertyId, t1: TPO, t2: TPO, combined: TPO) -> bool:
    return _FINDERS[p](t1, t2, combined) is None


def check_property(
    p: "PropertyId | str", t1: TPO, t2: TPO, combined: TPO
) -> Optional[Counterexample]:
    """First violation of property p in canonical scan order, or None."""
    p = PropertyId.parse(p)
    if not t1.size == t2.size == combined.size:
        raise InvalidTPOError("orders range over different universes")
    found = _FINDERS[p](t1, t2, combined)
    if found is None:
        return None
    states = {"left": t1, "right": t2, "combined": combined}
    narrative = _NARRATIVES[p]
    if found[0] == "S":
        return Counterexample(
            postulate=p.value,
            states=states,
            sentences={"S": WorldSet(found[1], combined.size)},
            narrative=narrative,
        )
    worlds: Tuple[int, ...] = found
    if p == PropertyId.NO:
        worlds, (i, j) = found[:3], found[3:]
        narrative = narrative.replace("_i", f"_{i}").replace("_j", f"_{j}")
    elif p == PropertyId.PAR:
        worlds = found[:2]
        narrative = narrative.replace("queue i", f"queue {found[2]}")
    return Counterexample(postulate=p.value, states=states, worlds=tuple(worlds), narrative=narrative)


def is_team_queue_output(t1: TPO, t2: TPO, combined: TPO) -> bool:
    return recover_a_sequence(t1, t2, combined) is not None

