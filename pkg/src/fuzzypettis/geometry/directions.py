"""Finite, antipodally symmetric direction grids used to probe support functions."""

from dataclasses import dataclass
from typing import List

import numpy as np

from ..exceptions import DimensionMismatchError, FuzzyPettisError
from .convex import UNIT_NORM_TOL, Direction

DEFAULT_GRID_2D = 64
DEFAULT_SAMPLE = 128
DEFAULT_SEED = 0


@dataclass(frozen=True, eq=False)
class DirectionGrid:
    """Ordered unit directions in R^d, closed under negation and spanning R^d."""

    dims: int
    directions: tuple

    def __post_init__(self):
        if self.dims < 1:
            raise DimensionMismatchError("Direction grid needs dims >= 1")
        matrix = np.array([d.coords for d in self.directions], dtype=float)
        if matrix.ndim != 2 or matrix.shape[1] != self.dims:
            raise DimensionMismatchError(
                f"Direction grid entries must have dimension {self.dims}"
            )
        for i in range(len(matrix)):
            gaps = np.linalg.norm(matrix[i + 1:] - matrix[i], axis=1)
            if gaps.size and np.min(gaps) <= UNIT_NORM_TOL:
                raise FuzzyPettisError(f"Duplicate direction at position {i}", "grid")
            if np.min(np.linalg.norm(matrix + matrix[i], axis=1)) > UNIT_NORM_TOL:
                raise FuzzyPettisError(f"Direction {i} has no antipode in the grid", "grid")
        if np.linalg.matrix_rank(matrix) < self.dims:
            raise FuzzyPettisError("Direction grid does not span R^d", "grid")
        matrix.setflags(write=False)
        object.__setattr__(self, "_matrix", matrix)

    @property
    def matrix(self) -> np.ndarray:
        """Directions stacked as rows, shape (m, d)."""
        return self._matrix

    def __len__(self) -> int:
        return len(self.directions)

    def __iter__(self):
        return iter(self.directions)

    @classmethod
    def from_vectors(cls, vectors: np.ndarray) -> "DirectionGrid":
        vectors = np.atleast_2d(np.asarray(vectors, dtype=float))
        return cls(vectors.shape[1], tuple(Direction.from_vector(v, warn=False) for v in vectors))


def _dedupe_symmetric(vectors: List[np.ndarray]) -> List[np.ndarray]:
    unique: List[np.ndarray] = []
    for vector in vectors:
        if all(np.linalg.norm(vector - other) > UNIT_NORM_TOL for other in unique):
            unique.append(vector)
    return unique


def default_grid(
    dims: int,
    size_2d: int = DEFAULT_GRID_2D,
    sample: int = DEFAULT_SAMPLE,
    seed: int = DEFAULT_SEED
) -> DirectionGrid:
    """
    Build the standard probing grid for R^dims.

    d = 1 gives {+1, -1}; d = 2 gives ``size_2d`` equally spaced angles (rounded
    up to an even count); d >= 3 gives the 2d signed axes plus ``sample``
    directions drawn in antipodal pairs from a seeded Gaussian.

    Args:
        dims: Ambient dimension
        size_2d: Number of angles in the plane
        sample: Number of sampled directions in dimension three and above
        seed: Seed of the sampling generator

    Returns:
        DirectionGrid
    """
    if dims < 1:
        raise DimensionMismatchError(f"Grid dimension must be >= 1, got {dims}")

    if dims == 1:
        return DirectionGrid.from_vectors(np.array([[1.0], [-1.0]]))

    if dims == 2:
        count = max(4, size_2d + size_2d % 2)
        angles = 2.0 * np.pi * np.arange(count) / count
        half = count // 2
        vectors = np.column_stack([np.cos(angles), np.sin(angles)])
        # exact antipodes instead of trusting cos/sin rounding
        vectors[half:] = -vectors[:half]
        return DirectionGrid.from_vectors(vectors)

    axes = np.vstack([np.eye(dims), -np.eye(dims)])
    rng = np.random.default_rng(seed)
    draws = rng.standard_normal((max(sample // 2, 0), dims))
    draws /= np.linalg.norm(draws, axis=1, keepdims=True)
    candidates = [*axes, *draws, *(-draws)]
    return DirectionGrid.from_vectors(np.array(_dedupe_symmetric(candidates)))
