"""Convex polytopes in vertex representation and the exact support-function kernel."""

from dataclasses import dataclass
from typing import Sequence, Union

import numpy as np
from loguru import logger
from scipy.spatial import ConvexHull, QhullError

from ..exceptions import DimensionMismatchError, FuzzyPettisError
from .solver import DEFAULT_TOL, MAX_ITERATIONS, min_norm_point_of

UNIT_NORM_TOL = 1e-12
NORMALIZE_WARN_TOL = 1e-6
TIE_TOL = 1e-12
RANK_TOL = 1e-10

ArrayLike = Union[Sequence[float], np.ndarray]


def _frozen(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class Direction:
    """Unit vector standing in for a continuous linear functional on R^d."""

    coords: np.ndarray

    def __post_init__(self):
        coords = np.asarray(self.coords, dtype=float).reshape(-1)
        if coords.size < 1:
            raise DimensionMismatchError("Direction needs at least one coordinate")
        norm = float(np.linalg.norm(coords))
        if abs(norm - 1.0) > UNIT_NORM_TOL:
            raise FuzzyPettisError(f"Direction must have unit norm, got {norm!r}", "direction")
        object.__setattr__(self, "coords", _frozen(coords.copy()))

    @property
    def dims(self) -> int:
        return self.coords.size

    @classmethod
    def from_vector(cls, vector: ArrayLike, warn: bool = True) -> "Direction":
        """Normalise an arbitrary nonzero vector, warning when it was far from unit length."""
        vector = np.asarray(vector, dtype=float).reshape(-1)
        norm = float(np.linalg.norm(vector))
        if norm == 0.0 or not np.isfinite(norm):
            raise FuzzyPettisError("Direction vector must be finite and nonzero", "direction")
        if warn and abs(norm - 1.0) > NORMALIZE_WARN_TOL:
            logger.warning(f"Direction {vector.tolist()} has norm {norm:.6g}; normalizing")
        return cls(vector / norm)

    def __neg__(self) -> "Direction":
        return Direction(-self.coords)

    def __repr__(self) -> str:
        return f"<Direction {np.round(self.coords, 6).tolist()}>"


@dataclass(frozen=True, eq=False)
class ConvexBody:
    """
    Nonempty compact convex polytope given by a vertex list.

    The body is the convex hull of ``vertices``; repeated or interior points are
    allowed and do not change the set.
    """

    vertices: np.ndarray

    def __post_init__(self):
        vertices = np.asarray(self.vertices, dtype=float)
        if vertices.ndim != 2 or vertices.shape[0] < 1 or vertices.shape[1] < 1:
            raise FuzzyPettisError(
                f"Vertex list must have shape (n, d) with n, d >= 1, got {vertices.shape}",
                "vertices"
            )
        if not np.all(np.isfinite(vertices)):
            raise FuzzyPettisError("Vertex coordinates must be finite", "vertices")
        object.__setattr__(self, "vertices", _frozen(vertices.copy()))

    @property
    def dims(self) -> int:
        return self.vertices.shape[1]

    @property
    def vertex_count(self) -> int:
        return self.vertices.shape[0]

    @classmethod
    def singleton(cls, point: ArrayLike) -> "ConvexBody":
        return cls(np.asarray(point, dtype=float).reshape(1, -1))

    @classmethod
    def origin(cls, dims: int) -> "ConvexBody":
        return cls(np.zeros((1, dims)))

    @classmethod
    def box(cls, radius: float, dims: int = 2) -> "ConvexBody":
        """Axis-aligned cube [-radius, radius]^dims."""
        corners = np.array(np.meshgrid(*[[-radius, radius]] * dims, indexing="ij"))
        return cls(corners.reshape(dims, -1).T)

    def max_vertex_norm(self) -> float:
        return float(np.max(np.linalg.norm(self.vertices, axis=1)))

    def __repr__(self) -> str:
        return f"<ConvexBody d={self.dims} vertices={self.vertex_count}>"


def _check_dims(expected: int, actual: int, what: str) -> None:
    if expected != actual:
        raise DimensionMismatchError(f"{what} has dimension {actual}, expected {expected}")


def _direction_coords(u: Union[Direction, ArrayLike], dims: int) -> np.ndarray:
    coords = u.coords if isinstance(u, Direction) else np.asarray(u, dtype=float).reshape(-1)
    _check_dims(dims, coords.size, "Direction")
    return coords


def _point(x: ArrayLike, dims: int) -> np.ndarray:
    point = np.asarray(x, dtype=float).reshape(-1)
    _check_dims(dims, point.size, "Point")
    return point


def support(A: ConvexBody, u: Union[Direction, ArrayLike]) -> float:
    """Support function s(u, A): the maximum of <u, v> over the vertices of A."""
    coords = _direction_coords(u, A.dims)
    return float(np.max(A.vertices @ coords))


def support_profile(A: ConvexBody, directions: np.ndarray) -> np.ndarray:
    """Support values of A at every row of ``directions``, shape (m,)."""
    directions = np.atleast_2d(np.asarray(directions, dtype=float))
    _check_dims(A.dims, directions.shape[1], "Direction grid")
    return np.max(A.vertices @ directions.T, axis=0)


def minkowski_add(A: ConvexBody, B: ConvexBody) -> ConvexBody:
    """Minkowski sum A + B as the list of all pairwise vertex sums."""
    _check_dims(A.dims, B.dims, "Second summand")
    sums = A.vertices[:, None, :] + B.vertices[None, :, :]
    return ConvexBody(sums.reshape(-1, A.dims))


def scale(A: ConvexBody, k: float) -> ConvexBody:
    """Scalar multiple kA; k = 0 collapses to the singleton at the origin."""
    if k == 0:
        return ConvexBody.origin(A.dims)
    return ConvexBody(A.vertices * float(k))


def translate_by_negative(A: ConvexBody, x: ArrayLike) -> ConvexBody:
    """The body A - x = {z - x : z in A}."""
    return ConvexBody(A.vertices - _point(x, A.dims))


def hull_union(A: ConvexBody, B: ConvexBody) -> ConvexBody:
    """conv(A ∪ B) by vertex concatenation."""
    _check_dims(A.dims, B.dims, "Second body")
    return ConvexBody(np.vstack([A.vertices, B.vertices]))


def min_norm_point(
    A: ConvexBody,
    tol: float = DEFAULT_TOL,
    max_iterations: int = MAX_ITERATIONS
) -> np.ndarray:
    """Point of A whose norm is within ``tol`` of the smallest norm in A."""
    return min_norm_point_of(A.vertices, tol=tol, max_iterations=max_iterations)


def distance(
    x: ArrayLike,
    A: ConvexBody,
    tol: float = DEFAULT_TOL,
    max_iterations: int = MAX_ITERATIONS
) -> float:
    """Euclidean distance from x to A, accurate to ``tol``."""
    shifted = translate_by_negative(A, x)
    return float(np.linalg.norm(min_norm_point(shifted, tol, max_iterations)))


def contains(A: ConvexBody, x: ArrayLike, tol: float = DEFAULT_TOL) -> bool:
    return distance(x, A, tol) <= tol


def subset_of(A: ConvexBody, B: ConvexBody, tol: float = DEFAULT_TOL) -> bool:
    """True when every vertex of A lies in B up to ``tol``."""
    _check_dims(A.dims, B.dims, "Containing body")
    return all(contains(B, vertex, tol) for vertex in A.vertices)


def directed_hausdorff(A: ConvexBody, B: ConvexBody, tol: float = DEFAULT_TOL) -> float:
    """sup over a in A of dist(a, B); attained at a vertex of A."""
    _check_dims(A.dims, B.dims, "Second body")
    return max(distance(vertex, B, tol) for vertex in A.vertices)


def hausdorff(A: ConvexBody, B: ConvexBody, tol: float = DEFAULT_TOL) -> float:
    """Hausdorff distance between two polytopes, accurate to ``tol``."""
    return max(directed_hausdorff(A, B, tol), directed_hausdorff(B, A, tol))


def hausdorff_support_estimate(A: ConvexBody, B: ConvexBody, grid) -> float:
    """
    Lower bound on the Hausdorff distance from support functions on a direction grid.

    Args:
        A: First body
        B: Second body
        grid: DirectionGrid (or an (m, d) array of unit directions)

    Returns:
        max over the grid of |s(u, A) - s(u, B)|
    """
    directions = grid.matrix if hasattr(grid, "matrix") else np.asarray(grid, dtype=float)
    _check_dims(A.dims, B.dims, "Second body")
    gaps = np.abs(support_profile(A, directions) - support_profile(B, directions))
    return float(np.max(gaps))


def canonical_selection(A: ConvexBody, u: Union[Direction, ArrayLike]) -> np.ndarray:
    """
    Vertex maximising <u, .>, ties resolved toward the lexicographically largest vertex.

    Scores within TIE_TOL (relative) of the maximum count as ties so that the
    choice stays additive across Minkowski sums despite rounding in the sums.
    """
    coords = _direction_coords(u, A.dims)
    scores = A.vertices @ coords
    best = float(np.max(scores))
    tied = A.vertices[scores >= best - TIE_TOL * max(1.0, abs(best))]
    # lexsort keys run last-to-first, so reverse the columns to make column 0 primary
    order = np.lexsort(tied.T[::-1])
    return tied[order[-1]].copy()


def _prune_by_distance(vertices: np.ndarray, tol: float) -> np.ndarray:
    kept = list(range(len(vertices)))
    for index in range(len(vertices)):
        if len(kept) == 1:
            break
        others = [j for j in kept if j != index]
        if distance(vertices[index], ConvexBody(vertices[others]), tol) <= tol:
            kept = others
    return vertices[kept]


def prune_redundant(A: ConvexBody, tol: float = 1e-12) -> ConvexBody:
    """
    Keep only the extreme points of A.

    The cloud is projected onto its affine hull first so that flat bodies
    (segments in the plane, polygons in space) still get a qhull pass. Vertices
    qhull cannot settle are tested against the hull of the others.

    Args:
        A: Body to prune
        tol: Distance below which a vertex counts as redundant

    Returns:
        ConvexBody with the same hull and at least one vertex
    """
    vertices = np.unique(A.vertices, axis=0)
    if len(vertices) == 1:
        return ConvexBody(vertices)

    centered = vertices - vertices.mean(axis=0)
    _, singular, basis = np.linalg.svd(centered, full_matrices=False)
    rank = int(np.sum(singular > RANK_TOL * max(1.0, singular[0])))

    if rank == 0:
        pruned = vertices[:1]
    elif rank == 1:
        line = centered @ basis[0]
        pruned = vertices[[int(np.argmin(line)), int(np.argmax(line))]]
    else:
        try:
            hull = ConvexHull(centered @ basis[:rank].T)
            pruned = vertices[np.sort(hull.vertices)]
        except QhullError as e:
            logger.debug(f"qhull failed ({e}); falling back to distance pruning")
            pruned = _prune_by_distance(vertices, tol)

    if len(pruned) < A.vertex_count:
        logger.debug(f"Pruned {A.vertex_count - len(pruned)} of {A.vertex_count} vertices")
    return ConvexBody(pruned)
