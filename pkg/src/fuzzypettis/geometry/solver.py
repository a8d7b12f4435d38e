"""Minimum-norm point of a vertex cloud's convex hull.

Fully-corrective conditional gradient: each outer iteration adds the vertex
returned by the linear minimisation oracle to the active set, then re-solves
the min-norm problem over the active set exactly with non-negative least
squares. No away steps are taken; vertices only leave the active set when
their corrected weight drops to zero.
"""

from typing import List, Tuple

import numpy as np
from loguru import logger
from scipy.optimize import nnls

from ..exceptions import ConvergenceError

DEFAULT_TOL = 1e-9
MAX_ITERATIONS = 10_000


def _corrective_step(active_vertices: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """
    Exact min-norm point over the hull of a small vertex set.

    The simplex constraint is carried as an extra weighted row of ones. The
    squared norm is homogeneous in the weights, so the penalised minimiser is a
    positive multiple of the constrained one and renormalising recovers it.

    Args:
        active_vertices: Array of shape (k, d)

    Returns:
        Tuple of (weights summing to one, resulting point)
    """
    k = active_vertices.shape[0]
    scale = max(1.0, float(np.max(np.abs(active_vertices))))
    system = np.vstack([active_vertices.T, np.full((1, k), scale)])
    rhs = np.zeros(system.shape[0])
    rhs[-1] = scale

    weights, _ = nnls(system, rhs)
    total = weights.sum()
    if total <= 0:
        weights = np.full(k, 1.0 / k)
    else:
        weights = weights / total

    return weights, weights @ active_vertices


def _line_search_step(
    x: np.ndarray,
    vertex: np.ndarray,
    weights: np.ndarray,
    position: int
) -> Tuple[np.ndarray, np.ndarray]:
    """
    Plain conditional-gradient step from x toward one vertex with exact line search.

    Args:
        x: Current point
        vertex: Target vertex
        weights: Active-set weights of x
        position: Index of ``vertex`` within the active set

    Returns:
        Tuple of (updated weights, updated point)
    """
    step = x - vertex
    length = float(step @ step)
    if length == 0.0:
        return weights, x
    gamma = min(1.0, max(0.0, float(x @ step) / length))
    weights = (1.0 - gamma) * weights
    weights[position] += gamma
    return weights, x - gamma * step


def min_norm_point_of(
    vertices: np.ndarray,
    tol: float = DEFAULT_TOL,
    max_iterations: int = MAX_ITERATIONS
) -> np.ndarray:
    """
    Find a point of conv(vertices) whose norm is within ``tol`` of the minimum.

    When the corrective solve fails to lower the norm or drops the new vertex,
    the iteration falls back to a line-search step toward that vertex.

    Args:
        vertices: Array of shape (n, d)
        tol: Accuracy on the norm, must be positive
        max_iterations: Iteration cap before giving up

    Returns:
        Point of shape (d,) lying in the hull

    Raises:
        ConvergenceError: If the duality gap does not close within the cap
    """
    if tol <= 0:
        raise ValueError(f"Solver tolerance must be positive, got {tol}")

    vertices = np.asarray(vertices, dtype=float)
    norms = np.linalg.norm(vertices, axis=1)
    start = int(np.argmin(norms))

    active: List[int] = [start]
    weights = np.ones(1)
    x = vertices[start].copy()

    for iteration in range(max_iterations):
        x_norm = float(np.linalg.norm(x))
        if x_norm <= tol:
            logger.debug(f"min-norm point reached the origin after {iteration} iterations")
            return x

        scores = vertices @ x
        candidate = int(np.argmin(scores))
        gap = float(x @ x - scores[candidate])

        # ||x|| - ||p*|| <= 2 * gap / ||x||
        if 2.0 * gap <= tol * x_norm:
            logger.debug(
                f"min-norm point converged after {iteration} iterations "
                f"(gap={gap:.3e}, active={len(active)})"
            )
            return x

        if candidate in active:
            weights, stepped = _line_search_step(
                x, vertices[candidate], weights, active.index(candidate)
            )
            if float(np.linalg.norm(stepped)) >= x_norm:
                logger.debug(f"min-norm point stalled at gap {gap:.3e}")
                return x
            x = stepped
            continue

        trial = active + [candidate]
        trial_weights, trial_x = _corrective_step(vertices[trial])
        if trial_weights[-1] > 0.0 and float(np.linalg.norm(trial_x)) < x_norm:
            weights, x = trial_weights, trial_x
        else:
            logger.debug(f"Corrective step stalled at iteration {iteration}, taking a line step")
            weights, x = _line_search_step(
                x, vertices[candidate], np.append(weights, 0.0), len(active)
            )
        active = trial

        keep = weights > 0.0
        if not keep.any():
            active, weights, x = [candidate], np.ones(1), vertices[candidate].copy()
            continue
        active = [index for index, kept in zip(active, keep) if kept]
        weights = weights[keep]

    raise ConvergenceError(
        f"min-norm point did not converge within {max_iterations} iterations "
        f"({len(vertices)} vertices, tol={tol})"
    )
