"""
Total preorder data model.
"""

from dataclasses import dataclass, field
from typing import Iterable, Sequence, Tuple

from app.errors import InvalidTPOError
from app.models.logic import WorldSet


@dataclass(frozen=True)
class TPO:
    """
    A total preorder over W as an ordered partition <S_1, ..., S_m>.

    Cell 1 holds the most plausible worlds. Two TPOs are equal iff their
    cell lists are equal.
    """

    cells: Tuple[WorldSet, ...]
    ranks: Tuple[int, ...] = field(init=False, repr=False, compare=False)
    masks: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not self.cells:
            raise InvalidTPOError("a tpo needs at least one cell")
        size = self.cells[0].size
        ranks = [0] * size
        covered = 0
        for rank, cell in enumerate(self.cells, start=1):
            if cell.size != size:
                raise InvalidTPOError("cells range over different universes")
            if not cell:
                raise InvalidTPOError(f"cell {rank} is empty")
            if cell.mask & covered:
                raise InvalidTPOError(f"cell {rank} overlaps an earlier cell")
            covered |= cell.mask
            for world in cell:
                ranks[world] = rank
        if covered != (1 << size) - 1:
            raise InvalidTPOError("cells do not cover every world")
        object.__setattr__(self, "ranks", tuple(ranks))
        object.__setattr__(self, "masks", tuple(cell.mask for cell in self.cells))

    @classmethod
    def from_masks(cls, masks: Iterable[int], size: int) -> "TPO":
        return cls(tuple(WorldSet(mask, size) for mask in masks))

    @classmethod
    def from_ranks(cls, ranks: Sequence[int]) -> "TPO":
        """Build from any rank vector; gaps between rank values are closed."""
        size = len(ranks)
        levels = sorted(set(ranks))
        return cls(tuple(
            WorldSet.of((x for x in range(size) if ranks[x] == level), size) for level in levels
        ))

    @property
    def size(self) -> int:
        return self.cells[0].size

    def leq(self, x: int, y: int) -> bool:
        return self.ranks[x] <= self.ranks[y]

    @property
    def key(self) -> str:
        """Stable text key, e.g. for seeding per-pair schedules."""
        return "/".join(str(cell.mask) for cell in self.cells)
