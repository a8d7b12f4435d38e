"""Generalized fuzzy numbers as finite nested families of level bodies."""

from bisect import bisect_left
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

import numpy as np
from loguru import logger

from ..exceptions import (
    DimensionMismatchError,
    LevelRangeError,
    NestingViolationError,
)
from ..geometry import ConvexBody, contains, hausdorff, minkowski_add, scale, subset_of
from ..geometry.solver import DEFAULT_TOL


@dataclass(frozen=True, order=True)
class Grade:
    """Membership grade in [0, 1]."""

    value: float

    def __post_init__(self):
        if not 0.0 <= self.value <= 1.0:
            raise LevelRangeError(f"Grade must lie in [0, 1], got {self.value}")

    def __float__(self) -> float:
        return float(self.value)


def _check_level(r: float) -> None:
    if not 0.0 < r <= 1.0:
        raise LevelRangeError(f"Level must lie in (0, 1], got {r}")


@dataclass(frozen=True, eq=False)
class FuzzyNumber:
    """
    Step fuzzy number u with [u]^r = C_i for the smallest stored level r_i >= r.

    Levels are strictly increasing in (0, 1] and end at 1. Nesting of the bodies
    is checked by ``from_level_family``; arithmetic in this module preserves it.
    """

    levels: Tuple[float, ...]
    bodies: Tuple[ConvexBody, ...]

    def __post_init__(self):
        levels = tuple(float(r) for r in self.levels)
        bodies = tuple(self.bodies)
        if not levels:
            raise LevelRangeError("A fuzzy number needs at least one level", "levels")
        if len(levels) != len(bodies):
            raise LevelRangeError(
                f"Got {len(levels)} levels but {len(bodies)} bodies", "levels"
            )
        for r in levels:
            _check_level(r)
        if any(b <= a for a, b in zip(levels, levels[1:])):
            raise LevelRangeError(f"Levels must be strictly increasing: {levels}", "levels")
        if levels[-1] != 1.0:
            raise LevelRangeError(f"Last level must be 1, got {levels[-1]}", "levels")
        dims = bodies[0].dims
        for body in bodies:
            if body.dims != dims:
                raise DimensionMismatchError("All level bodies must share one dimension")
        object.__setattr__(self, "levels", levels)
        object.__setattr__(self, "bodies", bodies)

    @property
    def dims(self) -> int:
        return self.bodies[0].dims

    @property
    def core_body(self) -> ConvexBody:
        """The level-1 body."""
        return self.bodies[-1]

    @property
    def support_body(self) -> ConvexBody:
        """The lowest stored level body, containing every other level."""
        return self.bodies[0]

    def __repr__(self) -> str:
        return f"<FuzzyNumber d={self.dims} levels={list(self.levels)}>"


def check_nesting(
    levels: Sequence[float],
    bodies: Sequence[ConvexBody],
    tol: float = DEFAULT_TOL
) -> None:
    """Raise NestingViolationError on the first pair with C_{i+1} not inside C_i."""
    for i in range(len(bodies) - 1):
        if not subset_of(bodies[i + 1], bodies[i], tol):
            raise NestingViolationError(
                f"Level {levels[i + 1]} body is not contained in level {levels[i]} body",
                pair=(i, i + 1),
                field=f"levels[{i + 1}]"
            )


def from_level_family(
    levels: Sequence[float],
    bodies: Sequence[ConvexBody],
    tol: float = DEFAULT_TOL
) -> FuzzyNumber:
    """
    Build a fuzzy number from a level family, validating range and nesting.

    Raises:
        LevelRangeError: On levels outside (0, 1], unsorted levels or a last level other than 1
        NestingViolationError: When a higher level body is not inside the one below it
    """
    u = FuzzyNumber(tuple(levels), tuple(bodies))
    check_nesting(u.levels, u.bodies, tol)
    return u


def null_element(dims: int) -> FuzzyNumber:
    """θ = χ_{0}: grade 1 at the origin and 0 elsewhere."""
    return FuzzyNumber((1.0,), (ConvexBody.origin(dims),))


def fuzzy_from_point(x: Sequence[float]) -> FuzzyNumber:
    """χ_{x}: the crisp point x seen as a fuzzy number."""
    return FuzzyNumber((1.0,), (ConvexBody.singleton(x),))


def level_cut(u: FuzzyNumber, r: float) -> ConvexBody:
    """[u]^r: the body of the smallest stored level >= r."""
    _check_level(r)
    return u.bodies[bisect_left(u.levels, r)]


def membership(u: FuzzyNumber, x: Sequence[float], tol: float = DEFAULT_TOL) -> Grade:
    """u(x) = sup{r : x in [u]^r}, which on a step family is a stored level or 0."""
    x = np.asarray(x, dtype=float).reshape(-1)
    if x.size != u.dims:
        raise DimensionMismatchError(f"Point has dimension {x.size}, expected {u.dims}")
    for r, body in zip(reversed(u.levels), reversed(u.bodies)):
        if contains(body, x, tol):
            return Grade(r)
    return Grade(0.0)


def merged_levels(*numbers: FuzzyNumber) -> Tuple[float, ...]:
    return tuple(sorted(set().union(*(u.levels for u in numbers))))


def add(u: FuzzyNumber, v: FuzzyNumber) -> FuzzyNumber:
    """Level-wise sum [u + v]^r = [u]^r + [v]^r on the merged level grid."""
    if u.dims != v.dims:
        raise DimensionMismatchError(f"Cannot add fuzzy numbers of dims {u.dims} and {v.dims}")
    levels = merged_levels(u, v)
    bodies = tuple(minkowski_add(level_cut(u, r), level_cut(v, r)) for r in levels)
    return FuzzyNumber(levels, bodies)


def scale_fuzzy(u: FuzzyNumber, k: float) -> FuzzyNumber:
    """Level-wise multiple [ku]^r = k[u]^r; k = 0 gives χ_{0}."""
    if k == 0:
        return null_element(u.dims)
    return FuzzyNumber(u.levels, tuple(scale(body, k) for body in u.bodies))


def fuzzy_hausdorff(u: FuzzyNumber, v: FuzzyNumber, tol: float = DEFAULT_TOL) -> float:
    """Uniform Hausdorff distance over the merged level grid."""
    if u.dims != v.dims:
        raise DimensionMismatchError(f"Cannot compare dims {u.dims} and {v.dims}")
    return max(hausdorff(level_cut(u, r), level_cut(v, r), tol) for r in merged_levels(u, v))


def level_family_conditions(u: FuzzyNumber, tol: float = DEFAULT_TOL) -> Dict[str, bool]:
    """
    Check the three conditions characterising a level family of a fuzzy number.

    Returns:
        Mapping with keys ``compact_convex`` (every level is a nonempty finite
        polytope), ``nested`` (higher levels sit inside lower ones) and
        ``left_continuous`` (cuts along an increasing sequence r_k -> r settle on
        the cut at r).
    """
    compact_convex = all(
        body.vertex_count >= 1 and bool(np.all(np.isfinite(body.vertices)))
        for body in u.bodies
    )

    try:
        check_nesting(u.levels, u.bodies, tol)
        nested = True
    except NestingViolationError as e:
        logger.warning(f"Level family not nested: {e}")
        nested = False

    left_continuous = True
    previous = 0.0
    for r, body in zip(u.levels, u.bodies):
        # any r_k in (previous, r] already lies on the step of r
        for fraction in (0.5, 0.9, 0.999999):
            probe = previous + fraction * (r - previous)
            if level_cut(u, probe) is not body:
                left_continuous = False
        previous = r

    return {
        "compact_convex": compact_convex,
        "nested": nested,
        "left_continuous": left_continuous,
    }


def describe(u: FuzzyNumber) -> List[dict]:
    """Rows (level, vertex index, coordinates) for tabular output."""
    rows = []
    for r, body in zip(u.levels, u.bodies):
        for index, vertex in enumerate(body.vertices):
            rows.append({"level": r, "vertex": index, **{
                f"x{k + 1}": float(c) for k, c in enumerate(vertex)
            }})
    return rows

