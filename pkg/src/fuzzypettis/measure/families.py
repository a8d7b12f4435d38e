"""Generated measure-space families: geometric tails and random scenarios."""

from dataclasses import dataclass
from typing import Optional, Tuple, Union

import numpy as np
from loguru import logger

from ..exceptions import FuzzyPettisError
from ..fuzzy import FuzzyNumber
from ..geometry import ConvexBody
from .mapping import FuzzyMapping
from .space import FiniteMeasureSpace, MeasurableSet


@dataclass(frozen=True, eq=False)
class TailFamily:
    """
    Atoms t1..tn with weights q^i, each carrying the same fuzzy value.

    Truncates the series Σ q^i K used to exercise countable additivity.
    """

    ratio: float
    value: FuzzyNumber
    space: FiniteMeasureSpace
    sets: Tuple[MeasurableSet, ...]
    mapping: FuzzyMapping

    @property
    def count(self) -> int:
        return len(self.sets)

    def tail_bound(self, m: int) -> float:
        """Bound q^{m+1}/(1-q) · max vertex norm on d_H(S_m, S_n) for every n > m."""
        q = self.ratio
        return q ** (m + 1) / (1.0 - q) * self.value.support_body.max_vertex_norm()


def geometric_tail_family(
    value: Union[ConvexBody, FuzzyNumber],
    ratio: float,
    count: int
) -> TailFamily:
    """
    Build the truncated geometric family A_1..A_n with μ(A_i) = q^i.

    Args:
        value: Constant fuzzy value carried by every atom (a body is taken as crisp)
        ratio: q in (0, 1)
        count: Number of atoms n >= 1

    Returns:
        TailFamily
    """
    if not 0.0 < ratio < 1.0:
        raise FuzzyPettisError(f"Tail ratio must lie in (0, 1), got {ratio}", "tail")
    if count < 1:
        raise FuzzyPettisError(f"Tail length must be >= 1, got {count}", "tail")

    if isinstance(value, ConvexBody):
        value = FuzzyNumber((1.0,), (value,))

    atoms = tuple(f"t{i}" for i in range(1, count + 1))
    weights = tuple(ratio ** i for i in range(1, count + 1))
    space = FiniteMeasureSpace(atoms, weights)
    sets = tuple(MeasurableSet(frozenset({i})) for i in range(count))
    mapping = FuzzyMapping(space, (value,) * count)

    logger.debug(f"Geometric tail family q={ratio}, n={count}")
    return TailFamily(ratio, value, space, sets, mapping)


def random_fuzzy_number(
    rng: np.random.Generator,
    dims: int,
    max_levels: int = 4,
    max_vertices: int = 10,
    spread: float = 3.0
) -> FuzzyNumber:
    """
    Random nested step fuzzy number.

    The level-1 body is a random vertex cloud; lower levels inflate it about
    its vertex centroid, which keeps every level inside the ones below.
    """
    n_levels = int(rng.integers(1, max_levels + 1))
    inner = np.round(rng.uniform(0.05, 0.95, size=n_levels - 1), 2)
    levels = sorted(set(inner.tolist()) - {1.0}) + [1.0]

    n_vertices = int(rng.integers(1, max_vertices + 1))
    center = rng.uniform(-spread, spread, size=dims)
    top = center + rng.normal(scale=1.0, size=(n_vertices, dims))
    centroid = top.mean(axis=0)

    # inflation factors decrease to exactly 1 at the top level
    steps = rng.uniform(0.1, 1.0, size=len(levels) - 1)
    factors = np.append(1.0 + np.cumsum(steps[::-1])[::-1], 1.0)
    bodies = tuple(
        ConvexBody(centroid + factor * (top - centroid)) for factor in factors
    )
    return FuzzyNumber(tuple(levels), bodies)


def random_mapping(
    rng: np.random.Generator,
    dims: int,
    max_atoms: int = 8,
    max_levels: int = 4,
    max_vertices: int = 10,
    zero_weight_prob: float = 0.15,
    space: Optional[FiniteMeasureSpace] = None
) -> FuzzyMapping:
    """
    Random simple fuzzy mapping.

    Args:
        rng: Seeded generator
        dims: Ambient dimension
        max_atoms: Largest atom count when ``space`` is not given
        max_levels: Largest number of stored levels per atom
        max_vertices: Largest vertex count per level body
        zero_weight_prob: Chance that an atom gets weight 0 (a null atom)
        space: Reuse an existing space instead of drawing one

    Returns:
        FuzzyMapping
    """
    if space is None:
        n_atoms = int(rng.integers(1, max_atoms + 1))
        weights = np.round(rng.uniform(0.1, 2.0, size=n_atoms), 3)
        weights[rng.uniform(size=n_atoms) < zero_weight_prob] = 0.0
        space = FiniteMeasureSpace(
            tuple(f"w{i}" for i in range(1, n_atoms + 1)), tuple(weights.tolist())
        )

    values = tuple(
        random_fuzzy_number(rng, dims, max_levels, max_vertices) for _ in range(len(space))
    )
    return FuzzyMapping(space, values)
