"""Finite atomic measure spaces and their measurable sets."""

import math
from dataclasses import dataclass
from itertools import combinations
from typing import FrozenSet, Iterable, List, Sequence, Tuple

from loguru import logger

from ..exceptions import FuzzyPettisError, InvalidSetError


@dataclass(frozen=True)
class MeasurableSet:
    """Set of atom indices; iteration is in increasing index order."""

    indices: FrozenSet[int]

    def __post_init__(self):
        object.__setattr__(self, "indices", frozenset(int(i) for i in self.indices))

    def __iter__(self):
        return iter(sorted(self.indices))

    def __len__(self) -> int:
        return len(self.indices)

    def __or__(self, other: "MeasurableSet") -> "MeasurableSet":
        return MeasurableSet(self.indices | other.indices)

    def __le__(self, other: "MeasurableSet") -> bool:
        return self.indices <= other.indices

    def isdisjoint(self, other: "MeasurableSet") -> bool:
        return self.indices.isdisjoint(other.indices)

    @classmethod
    def empty(cls) -> "MeasurableSet":
        return cls(frozenset())

    def __repr__(self) -> str:
        return f"MeasurableSet({sorted(self.indices)})"


@dataclass(frozen=True)
class FiniteMeasureSpace:
    """Atoms with nonnegative weights μ({ω}); every subset is measurable."""

    atoms: Tuple[str, ...]
    weights: Tuple[float, ...]

    def __post_init__(self):
        atoms = tuple(str(a) for a in self.atoms)
        weights = tuple(float(w) for w in self.weights)
        if not atoms:
            raise FuzzyPettisError("A measure space needs at least one atom", "atoms")
        if len(atoms) != len(weights):
            raise FuzzyPettisError(
                f"Got {len(atoms)} atoms but {len(weights)} weights", "weights"
            )
        if len(set(atoms)) != len(atoms):
            raise FuzzyPettisError("Atom identifiers must be unique", "atoms")
        for atom, weight in zip(atoms, weights):
            if not math.isfinite(weight) or weight < 0:
                raise FuzzyPettisError(
                    f"Weight of atom {atom!r} must be finite and >= 0, got {weight}",
                    f"weights[{atom}]"
                )
        object.__setattr__(self, "atoms", atoms)
        object.__setattr__(self, "weights", weights)

    def __len__(self) -> int:
        return len(self.atoms)

    @property
    def total(self) -> float:
        return math.fsum(self.weights)

    def full_set(self) -> MeasurableSet:
        return MeasurableSet(frozenset(range(len(self.atoms))))

    def subset(self, atom_ids: Iterable[str]) -> MeasurableSet:
        """Measurable set from atom identifiers."""
        lookup = {atom: i for i, atom in enumerate(self.atoms)}
        indices = set()
        for atom in atom_ids:
            if atom not in lookup:
                raise InvalidSetError(f"Unknown atom {atom!r}", "set")
            indices.add(lookup[atom])
        return MeasurableSet(frozenset(indices))

    def validate(self, A: MeasurableSet) -> None:
        for i in A.indices:
            if not 0 <= i < len(self.atoms):
                raise InvalidSetError(
                    f"Atom index {i} outside 0..{len(self.atoms) - 1}", "set"
                )

    def is_null(self, A: MeasurableSet) -> bool:
        return measure_of(self, A) == 0.0


def measure_of(space: FiniteMeasureSpace, A: MeasurableSet) -> float:
    """μ(A) as the sum of atom weights; μ(∅) = 0."""
    space.validate(A)
    return math.fsum(space.weights[i] for i in A)


def positive_sets(space: FiniteMeasureSpace, max_atoms: int = 6) -> List[MeasurableSet]:
    """
    Every measurable set of positive measure (Σ⁺).

    Spaces with more than ``max_atoms`` atoms fall back to the positive singletons
    plus the whole space to avoid the exponential enumeration.
    """
    n = len(space)
    if n > max_atoms:
        logger.info(f"{n} atoms exceed {max_atoms}; using singletons and the full set")
        candidates = [MeasurableSet(frozenset({i})) for i in range(n)] + [space.full_set()]
    else:
        candidates = [
            MeasurableSet(frozenset(combo))
            for size in range(1, n + 1)
            for combo in combinations(range(n), size)
        ]
    return [A for A in candidates if measure_of(space, A) > 0]


def check_partition(space: FiniteMeasureSpace, parts: Sequence[MeasurableSet]) -> None:
    """Raise InvalidSetError unless the parts are valid and pairwise disjoint."""
    for part in parts:
        space.validate(part)
    for i, j in combinations(range(len(parts)), 2):
        if not parts[i].isdisjoint(parts[j]):
            raise InvalidSetError(f"Partition parts {i} and {j} overlap", "partition")


def union_of(parts: Sequence[MeasurableSet]) -> MeasurableSet:
    indices: FrozenSet[int] = frozenset()
    for part in parts:
        indices = indices | part.indices
    return MeasurableSet(indices)
