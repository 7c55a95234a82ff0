"""
Total preorder machinery: ranks, minima, S-variance and enumeration.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterator, List, Optional, Union

from app.config import get_settings
from app.errors import CapExceededError, InvalidTPOError
from app.models.logic import Vocabulary, World, WorldSet, WorldSpace
from app.models.tpo import TPO

WorldRef = Union[int, World]


def _index(x: WorldRef) -> int:
    return x.index if isinstance(x, World) else x


def rank(t: TPO, x: WorldRef) -> int:
    """1-based rank of world x; rank 1 is most plausible."""
    return t.ranks[_index(x)]


def compare(t: TPO, x: WorldRef, y: WorldRef) -> bool:
    """x is at least as plausible as y."""
    return t.leq(_index(x), _index(y))


def min_mask(t: TPO, mask: int) -> int:
    for cell in t.masks:
        found = cell & mask
        if found:
            return found
    return 0


def min_worlds(t: TPO, s: WorldSet) -> WorldSet:
    """Most plausible members of s; empty iff s is."""
    return WorldSet(min_mask(t, s.mask), s.size)


def is_s_variant(t1: TPO, t2: TPO, s: WorldSet) -> bool:
    """t1 and t2 agree on every pair inside s and on every pair inside its complement."""
    if t1.size != t2.size:
        raise InvalidTPOError("orders range over different universes")
    for block in (s.mask, ~s.mask & ((1 << t1.size) - 1)):
        members = [x for x in range(t1.size) if block >> x & 1]
        for x in members:
            for y in members:
                if t1.leq(x, y) != t2.leq(x, y):
                    return False
    return True


def find_variant_set(t1: TPO, t2: TPO) -> Optional[WorldSet]:
    """The S with the smallest encoding making the pair S-variants, if any."""
    for mask in range(1 << t1.size):
        s = WorldSet(mask, t1.size)
        if is_s_variant(t1, t2, s):
            return s
    return None


@dataclass(frozen=True)
class VariantWitness:
    """A set S certifying that a pair of orders are S-variants."""

    left: TPO
    right: TPO
    s: WorldSet

    def __post_init__(self):
        if not is_s_variant(self.left, self.right, self.s):
            raise InvalidTPOError("orders are not variants on the given set")

    @classmethod
    def find(cls, left: TPO, right: TPO) -> Optional["VariantWitness"]:
        s = find_variant_set(left, right)
        return None if s is None else cls(left, right, s)


def universe_size(universe: Union[int, Vocabulary, WorldSpace]) -> int:
    if isinstance(universe, Vocabulary):
        return universe.n_worlds
    if isinstance(universe, WorldSpace):
        return universe.size
    return universe


def enumerate_tpos(universe: Union[int, Vocabulary, WorldSpace]) -> Iterator[TPO]:
    """
    Every ordered partition of W exactly once.

    First cells are taken in ascending encoding, recursively, so the order is
    deterministic. Raises CapExceededError above the enumeration limit.
    """
    size = universe_size(universe)
    limit = get_settings().enumeration_limit
    if size < 1 or size > limit:
        raise CapExceededError(f"cannot enumerate orders over {size} worlds (limit {limit})")
    for masks in _ordered_partitions((1 << size) - 1):
        yield TPO.from_masks(masks, size)


def _ordered_partitions(remaining: int) -> Iterator[List[int]]:
    if not remaining:
        yield []
        return
    # ascending nonempty submasks of `remaining`
    submasks = []
    sub = remaining
    while sub:
        submasks.append(sub)
        sub = (sub - 1) & remaining
    for first in reversed(submasks):
        for rest in _ordered_partitions(remaining & ~first):
            yield [first] + rest


@lru_cache(maxsize=None)
def fubini(n: int) -> int:
    """Ordered Bell number: how many total preorders n worlds admit."""
    if n == 0:
        return 1
    return sum(comb(n, k) * fubini(n - k) for k in range(1, n + 1))


def nonempty_subsets(size: int) -> Iterator[WorldSet]:
    """Nonempty world sets in ascending encoding."""
    for mask in range(1, 1 << size):
        yield WorldSet(mask, size)
