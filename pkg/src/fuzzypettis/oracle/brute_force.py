"""
Slow reference implementations used to cross-check the kernel.

Nothing here calls the distance solver: support is an exhaustive scalar scan,
hull membership enumerates small simplices (Carathéodory), and sup-min
addition scans a sample grid. Every routine sits behind a size guard and
refuses oversized instances instead of falling back to the fast path.
"""

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence, Union

import numpy as np
from loguru import logger

from ..exceptions import CoverageError, DimensionMismatchError, OracleLimitError
from ..fuzzy import FuzzyNumber, Grade
from ..geometry import ConvexBody, Direction

MAX_VERTICES = 12
MAX_DIMS = 3
MAX_GRID_POINTS = 500_000
DEFAULT_DIVISIONS = 200
ORACLE_TOL = 1e-9


def oracle_support(A: ConvexBody, u: Union[Direction, Sequence[float]]) -> float:
    """Support value by a plain loop of exactly summed dot products."""
    coords = u.coords if isinstance(u, Direction) else np.asarray(u, dtype=float).reshape(-1)
    if len(coords) != A.dims:
        raise DimensionMismatchError(f"Direction has dimension {len(coords)}, expected {A.dims}")
    best = -math.inf
    for vertex in A.vertices.tolist():
        value = math.fsum(a * b for a, b in zip(vertex, coords.tolist()))
        if value > best:
            best = value
    return best


def _check_instance(cloud: np.ndarray, max_vertices: int, max_dims: int) -> None:
    n, d = cloud.shape
    if d > max_dims or n > max_vertices:
        raise OracleLimitError(
            f"Oracle instance with {n} vertices in d = {d} exceeds "
            f"{max_vertices} vertices / d <= {max_dims}"
        )


def oracle_hull_membership_many(
    points: np.ndarray,
    cloud: np.ndarray,
    tol: float = ORACLE_TOL,
    max_vertices: int = MAX_VERTICES,
    max_dims: int = MAX_DIMS
) -> np.ndarray:
    """
    Vectorised Carathéodory test for many query points.

    Every subset of at most d + 1 cloud points is tried; a point is inside when
    some subset reproduces it as an affine combination with weights >= -tol and
    residual <= tol.

    Args:
        points: Query points, shape (m, d)
        cloud: Vertex cloud, shape (n, d)
        tol: Tolerance on residual and weights
        max_vertices: Size guard on n
        max_dims: Size guard on d

    Returns:
        Boolean array of shape (m,)
    """
    cloud = np.atleast_2d(np.asarray(cloud, dtype=float))
    points = np.atleast_2d(np.asarray(points, dtype=float))
    _check_instance(cloud, max_vertices, max_dims)
    if points.shape[1] != cloud.shape[1]:
        raise DimensionMismatchError("Query points and cloud differ in dimension")

    n, d = cloud.shape
    inside = np.zeros(len(points), dtype=bool)
    targets = np.vstack([points.T, np.ones((1, len(points)))])

    for size in range(1, min(d + 1, n) + 1):
        for subset in combinations(range(n), size):
            system = np.vstack([cloud[list(subset)].T, np.ones((1, size))])
            weights = np.linalg.pinv(system) @ targets
            residual = np.linalg.norm(system @ weights - targets, axis=0)
            inside |= (residual <= tol) & np.all(weights >= -tol, axis=0)
            if inside.all():
                return inside
    return inside


def oracle_hull_membership(
    x: Sequence[float],
    cloud: Union[ConvexBody, np.ndarray],
    tol: float = ORACLE_TOL
) -> bool:
    """Whether x lies within ``tol`` of some simplex spanned by at most d + 1 cloud points."""
    vertices = cloud.vertices if isinstance(cloud, ConvexBody) else cloud
    return bool(oracle_hull_membership_many(np.atleast_2d(x), vertices, tol)[0])


@dataclass(frozen=True, eq=False)
class SampleGrid:
    """Regular grid lower + k·h covering a box, k = 0..counts-1 per axis."""

    lower: np.ndarray
    upper: np.ndarray
    step: float

    def __post_init__(self):
        lower = np.asarray(self.lower, dtype=float).reshape(-1)
        upper = np.asarray(self.upper, dtype=float).reshape(-1)
        if lower.shape != upper.shape or np.any(upper < lower):
            raise CoverageError("Sample grid box is malformed", "grid")
        if not self.step > 0:
            raise CoverageError(f"Sample grid step must be positive, got {self.step}", "grid")
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)

    @property
    def dims(self) -> int:
        return self.lower.size

    @property
    def counts(self) -> np.ndarray:
        return np.floor((self.upper - self.lower) / self.step + 1e-9).astype(int) + 1

    def points(self) -> np.ndarray:
        """All grid points, shape (N, d)."""
        total = int(np.prod(self.counts))
        if total > MAX_GRID_POINTS:
            raise OracleLimitError(f"Sample grid has {total} points (limit {MAX_GRID_POINTS})")
        axes = [self.lower[k] + self.step * np.arange(self.counts[k]) for k in range(self.dims)]
        mesh = np.meshgrid(*axes, indexing="ij")
        return np.column_stack([m.reshape(-1) for m in mesh])

    def covers(self, bodies: Iterable[ConvexBody], tol: float = ORACLE_TOL) -> bool:
        top = self.lower + self.step * (self.counts - 1)
        return all(
            np.all(body.vertices.min(axis=0) >= self.lower - tol)
            and np.all(body.vertices.max(axis=0) <= top + tol)
            for body in bodies
        )

    @classmethod
    def covering(cls, bodies: Sequence[ConvexBody], divisions: int = DEFAULT_DIVISIONS):
        """Grid over the joint bounding box with step = box diameter / divisions."""
        stacked = np.vstack([body.vertices for body in bodies])
        lower = stacked.min(axis=0)
        upper = stacked.max(axis=0)
        diameter = float(np.linalg.norm(upper - lower))
        step = diameter / divisions if diameter > 0 else 1.0
        # widen the top edge to the next grid node so the box stays covered
        counts = np.ceil((upper - lower) / step - 1e-9).astype(int)
        return cls(lower, lower + step * counts, step)


def oracle_grades(u: FuzzyNumber, points: np.ndarray, tol: float = ORACLE_TOL) -> np.ndarray:
    """Membership grades of many points, via the Carathéodory test per level."""
    grades = np.zeros(len(points))
    for r, body in zip(u.levels, u.bodies):
        inside = oracle_hull_membership_many(points, body.vertices, tol)
        grades[inside] = r
    return grades


def oracle_supmin_add(
    u: FuzzyNumber,
    v: FuzzyNumber,
    x: Sequence[float],
    grid: SampleGrid,
    tol: float = ORACLE_TOL
) -> Grade:
    """
    (u + v)(x) = sup over y + z = x of min(u(y), v(z)), restricted to grid points y.

    A lower bound on the true supremum; exact when x splits on the grid.

    Raises:
        CoverageError: If the grid does not cover the supports of u and v
    """
    if not grid.covers([u.support_body, v.support_body], tol):
        raise CoverageError("Sample grid does not cover the fuzzy numbers' supports", "grid")
    x = np.asarray(x, dtype=float).reshape(-1)
    ys = grid.points()
    grade_u = oracle_grades(u, ys, tol)
    candidates = grade_u > 0
    if not candidates.any():
        return Grade(0.0)
    grade_v = oracle_grades(v, x - ys[candidates], tol)
    best = float(np.max(np.minimum(grade_u[candidates], grade_v)))
    logger.debug(f"Sup-min oracle scanned {len(ys)} grid points, grade {best}")
    return Grade(best)
