"""
Propositional language and world-set data models.
"""

import re
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, Optional, Tuple, Union

from app.config import get_settings
from app.errors import InvalidVocabularyError, UnknownWorldError

_IDENTIFIER = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")

# Reserved for the constants of the sentence grammar
RESERVED_NAMES = frozenset({"T", "F"})


@dataclass(frozen=True)
class WorldSet:
    """
    A subset of the worlds of a universe of `size` worlds.

    Members are world indices; bit i of `mask` is set iff world i belongs.
    Masks double as the canonical encoding used for deterministic scans.
    """

    mask: int
    size: int

    def __post_init__(self):
        if self.size < 0 or not 0 <= self.mask < (1 << self.size):
            raise ValueError(f"mask {self.mask} does not fit a universe of {self.size} worlds")

    @classmethod
    def empty(cls, size: int) -> "WorldSet":
        return cls(0, size)

    @classmethod
    def full(cls, size: int) -> "WorldSet":
        return cls((1 << size) - 1, size)

    @classmethod
    def of(cls, indices: Iterable[int], size: int) -> "WorldSet":
        mask = 0
        for index in indices:
            mask |= 1 << index
        return cls(mask, size)

    def _same_universe(self, other: "WorldSet") -> None:
        if other.size != self.size:
            raise ValueError("world sets over different universes")

    def __contains__(self, index: int) -> bool:
        return bool(self.mask >> index & 1)

    def __iter__(self) -> Iterator[int]:
        mask, index = self.mask, 0
        while mask:
            if mask & 1:
                yield index
            mask >>= 1
            index += 1

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __bool__(self) -> bool:
        return self.mask != 0

    def __or__(self, other: "WorldSet") -> "WorldSet":
        self._same_universe(other)
        return WorldSet(self.mask | other.mask, self.size)

    def __and__(self, other: "WorldSet") -> "WorldSet":
        self._same_universe(other)
        return WorldSet(self.mask & other.mask, self.size)

    def __sub__(self, other: "WorldSet") -> "WorldSet":
        self._same_universe(other)
        return WorldSet(self.mask & ~other.mask, self.size)

    def __invert__(self) -> "WorldSet":
        return WorldSet(((1 << self.size) - 1) & ~self.mask, self.size)

    def __le__(self, other: "WorldSet") -> bool:
        """Subset test."""
        self._same_universe(other)
        return self.mask & ~other.mask == 0

    @property
    def is_full(self) -> bool:
        return self.mask == (1 << self.size) - 1


@dataclass(frozen=True)
class WorldSpace:
    """A universe of named worlds; world i is called labels[i]."""

    labels: Tuple[str, ...]
    vocabulary: Optional["Vocabulary"] = None

    def __post_init__(self):
        if not self.labels:
            raise InvalidVocabularyError("a universe needs at least one world")
        if len(set(self.labels)) != len(self.labels):
            raise InvalidVocabularyError(f"duplicate world names in {', '.join(self.labels)}")
        for label in self.labels:
            if not label or any(ch.isspace() or ch in "|,{}" for ch in label):
                raise InvalidVocabularyError(f"invalid world name '{label}'")

    @classmethod
    def parse(cls, text: str) -> "WorldSpace":
        """Parse a comma-separated world list such as `w,x,y,z`."""
        return cls(tuple(label.strip() for label in text.split(",") if label.strip()))

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def full(self) -> WorldSet:
        return WorldSet.full(self.size)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise UnknownWorldError(label, self.labels) from None

    def label(self, index: int) -> str:
        return self.labels[index]


@dataclass(frozen=True)
class Vocabulary:
    """
    Ordered atom names of a finitely generated propositional language.

    World i assigns true to atom k iff bit k of i is set; its label lists the
    truth values in atom order, so over (p, q) world "10" has p true, q false.
    """

    atoms: Tuple[str, ...]

    def __post_init__(self):
        if not self.atoms:
            raise InvalidVocabularyError("a vocabulary needs at least one atom")
        limit = get_settings().max_atoms
        if len(self.atoms) > limit:
            raise InvalidVocabularyError(f"{len(self.atoms)} atoms exceed the cap of {limit}")
        if len(set(self.atoms)) != len(self.atoms):
            raise InvalidVocabularyError(f"duplicate atoms in {', '.join(self.atoms)}")
        for atom in self.atoms:
            if not _IDENTIFIER.match(atom) or atom in RESERVED_NAMES:
                raise InvalidVocabularyError(f"invalid atom name '{atom}'")

    @classmethod
    def parse(cls, text: str) -> "Vocabulary":
        """Parse the `--atoms p,q` form."""
        return cls(tuple(atom.strip() for atom in text.split(",") if atom.strip()))

    @property
    def n_worlds(self) -> int:
        return 1 << len(self.atoms)

    def world(self, index: int) -> "World":
        return World(index, self)

    def label(self, index: int) -> str:
        return "".join("1" if index >> k & 1 else "0" for k in range(len(self.atoms)))

    def world_from_label(self, label: str) -> "World":
        if len(label) != len(self.atoms) or set(label) - {"0", "1"}:
            raise UnknownWorldError(label, (self.label(i) for i in range(self.n_worlds)))
        return World(sum(1 << k for k, bit in enumerate(label) if bit == "1"), self)

    def atom_models(self, atom: str) -> WorldSet:
        k = self.atoms.index(atom)
        return WorldSet.of((i for i in range(self.n_worlds) if i >> k & 1), self.n_worlds)

    @property
    def space(self) -> WorldSpace:
        return WorldSpace(tuple(self.label(i) for i in range(self.n_worlds)), vocabulary=self)


@dataclass(frozen=True)
class World:
    """A total truth assignment, identified by its canonical index."""

    index: int
    vocabulary: Vocabulary

    def __post_init__(self):
        if not 0 <= self.index < self.vocabulary.n_worlds:
            raise ValueError(f"world index {self.index} out of range")

    @property
    def assignment(self) -> Dict[str, bool]:
        return {atom: bool(self.index >> k & 1) for k, atom in enumerate(self.vocabulary.atoms)}


# Sentence AST

@dataclass(frozen=True)
class Atom:
    name: str


@dataclass(frozen=True)
class Top:
    pass


@dataclass(frozen=True)
class Bot:
    pass


@dataclass(frozen=True)
class Not:
    operand: "Sentence"


@dataclass(frozen=True)
class And:
    left: "Sentence"
    right: "Sentence"


@dataclass(frozen=True)
class Or:
    left: "Sentence"
    right: "Sentence"


@dataclass(frozen=True)
class Implies:
    left: "Sentence"
    right: "Sentence"


@dataclass(frozen=True)
class Iff:
    left: "Sentence"
    right: "Sentence"


Sentence = Union[Atom, Top, Bot, Not, And, Or, Implies, Iff]

BINARY_CONNECTIVES = (And, Or, Implies, Iff)
