"""Planar hull ordering for plot output (monotone chain)."""

from typing import List, Tuple

import numpy as np

from ..exceptions import UnsupportedDimensionError
from .convex import ConvexBody

Point = Tuple[float, float]


def _cross(o: Point, a: Point, b: Point) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def ordered_polygon(A: ConvexBody, tol: float = 1e-12) -> np.ndarray:
    """
    Hull vertices of a planar body, counterclockwise from the lexicographic minimum.

    Degenerate bodies come back as a single point or as the two segment ends.

    Args:
        A: Body in R^2
        tol: Relative threshold below which three points count as collinear

    Returns:
        Array of shape (k, 2)
    """
    if A.dims != 2:
        raise UnsupportedDimensionError(f"Polygon ordering needs d = 2, got d = {A.dims}")

    points = sorted(set(map(tuple, A.vertices.tolist())))
    if len(points) == 1:
        return np.array(points)

    extent = float(np.max(np.abs(A.vertices)))
    threshold = tol * max(1.0, extent) ** 2

    lower: List[Point] = []
    for p in points:
        while len(lower) > 1 and _cross(lower[-2], lower[-1], p) <= threshold:
            lower.pop()
        lower.append(p)

    upper: List[Point] = []
    for p in reversed(points):
        while len(upper) > 1 and _cross(upper[-2], upper[-1], p) <= threshold:
            upper.pop()
        upper.append(p)

    hull = lower[:-1] + upper[:-1]
    return np.array(hull)
