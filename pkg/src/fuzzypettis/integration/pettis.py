"""Fuzzy Pettis integral of simple fuzzy mappings over finite measure spaces."""

import math
from dataclasses import dataclass
from typing import Optional, Sequence, Union

import numpy as np
import pandas as pd
from loguru import logger

from ..fuzzy import FuzzyNumber, Grade, check_nesting, level_cut, membership
from ..geometry import (
    ConvexBody,
    Direction,
    DirectionGrid,
    default_grid,
    directed_hausdorff,
    minkowski_add,
    prune_redundant,
    scale,
    support,
    support_profile,
)
from ..geometry.solver import DEFAULT_TOL
from ..measure import FuzzyMapping, MeasurableSet, mapping_level

SUPPORT_TOL = 1e-9
PRUNE_TOL = 1e-12
# Raw Minkowski sums beyond this size are reduced to their extreme points.
AUTO_PRUNE_VERTICES = 2048


@dataclass(frozen=True, eq=False)
class IntegralResult:
    """
    M̃_Γ(A) together with its support-function residuals.

    ``residual_report`` has one row per (level, direction) with the support of
    the integral's level body, the weighted sum of pointwise supports and their
    absolute difference.
    """

    set: MeasurableSet
    value: FuzzyNumber
    residual_report: pd.DataFrame
    tolerance: float = SUPPORT_TOL

    @property
    def max_residual(self) -> float:
        if self.residual_report.empty:
            return 0.0
        return float(self.residual_report["residual"].max())

    @property
    def passed(self) -> bool:
        return self.max_residual <= self.tolerance


def scalar_integral(
    mapping: FuzzyMapping,
    A: MeasurableSet,
    u: Union[Direction, Sequence[float]],
    r: float
) -> float:
    """∫_A s(u, Γ̃_r) dμ = Σ_{ω∈A} μ({ω}) s(u, Γ̃_r(ω))."""
    space = mapping.space
    space.validate(A)
    view = mapping_level(mapping, r)
    return math.fsum(space.weights[i] * support(view[i], u) for i in A)


def scalar_integral_profile(
    mapping: FuzzyMapping,
    A: MeasurableSet,
    r: float,
    directions: np.ndarray
) -> np.ndarray:
    """scalar_integral over every row of ``directions`` at once."""
    space = mapping.space
    space.validate(A)
    view = mapping_level(mapping, r)
    terms = [space.weights[i] * support_profile(view[i], directions) for i in A]
    if not terms:
        return np.zeros(len(directions))
    return np.array([math.fsum(column) for column in np.array(terms).T])


def level_integral(
    mapping: FuzzyMapping,
    A: MeasurableSet,
    r: float,
    prune: bool = False
) -> ConvexBody:
    """
    Set-valued Pettis integral of Γ̃_r over A as a weighted Minkowski sum.

    Zero-weight atoms are skipped rather than scaled to the origin. Partial sums
    larger than AUTO_PRUNE_VERTICES are pruned even when ``prune`` is off.

    Args:
        mapping: Simple fuzzy mapping
        A: Measurable set
        r: Level in (0, 1]
        prune: Drop redundant vertices after every partial sum

    Returns:
        ConvexBody whose support function is ∫_A s(·, Γ̃_r) dμ
    """
    space = mapping.space
    space.validate(A)
    view = mapping_level(mapping, r)

    total = ConvexBody.origin(mapping.dims)
    for i in A:
        weight = space.weights[i]
        if weight == 0.0:
            continue
        total = minkowski_add(total, scale(view[i], weight))
        if prune or total.vertex_count > AUTO_PRUNE_VERTICES:
            total = prune_redundant(total, PRUNE_TOL)

    logger.debug(f"Level {r} integral over {len(A)} atoms has {total.vertex_count} vertices")
    return total


def _extreme_bodies(bodies: Sequence[ConvexBody]) -> tuple:
    return tuple(prune_redundant(body, PRUNE_TOL) for body in bodies)


def fuzzy_pettis_integral(
    mapping: FuzzyMapping,
    A: MeasurableSet,
    grid: Optional[DirectionGrid] = None,
    tol: float = DEFAULT_TOL,
    support_tol: float = SUPPORT_TOL,
    prune: bool = False
) -> IntegralResult:
    """
    Fuzzy Pettis integral M̃_Γ(A) level by level.

    Every level body is the set-valued integral of Γ̃_r over A on the union of the
    atoms' level grids (plus 1). Nesting of the assembled family is checked on the
    extreme points of each level body, and the support identity is measured on ``grid``.

    Args:
        mapping: Simple fuzzy mapping
        A: Measurable set
        grid: Directions for the residual report (default grid of the dimension)
        tol: Distance solver tolerance for the nesting check
        support_tol: Allowed support residual
        prune: Prune redundant vertices while summing

    Returns:
        IntegralResult

    Raises:
        InvalidSetError: If A names an atom outside the space
        NestingViolationError: If the assembled level family is not nested
    """
    mapping.space.validate(A)
    if grid is None:
        grid = default_grid(mapping.dims)
    levels = mapping.levels(A)
    bodies = tuple(level_integral(mapping, A, r, prune) for r in levels)
    check_nesting(levels, bodies if prune else _extreme_bodies(bodies), tol)
    value = FuzzyNumber(levels, bodies)

    rows = []
    for r, body in zip(levels, bodies):
        integral_support = support_profile(body, grid.matrix)
        expected = scalar_integral_profile(mapping, A, r, grid.matrix)
        residual = np.abs(integral_support - expected)
        for k in range(len(grid)):
            rows.append({
                "level": r,
                "direction": k,
                "support": float(integral_support[k]),
                "scalar_integral": float(expected[k]),
                "residual": float(residual[k]),
            })

    result = IntegralResult(A, value, pd.DataFrame(rows), support_tol)
    if not result.passed:
        logger.warning(
            f"Support residual {result.max_residual:.3e} exceeds {support_tol:.1e} on {A}"
        )
    return result


def integral_membership(
    mapping: FuzzyMapping,
    A: MeasurableSet,
    x: Sequence[float],
    tol: float = DEFAULT_TOL
) -> Grade:
    """Grade of x in M̃_Γ(A): sup{r : x ∈ [M̃_Γ(A)]^r}."""
    value = fuzzy_pettis_integral(mapping, A, tol=tol).value
    return membership(value, x, tol)


def scalar_integrability(
    mapping: FuzzyMapping,
    grid: Optional[DirectionGrid] = None
) -> pd.DataFrame:
    """
    Per level and direction, whether s(u, Γ̃_r(·)) is finite on every atom.

    On a finite space finiteness is integrability, so every row should read True.
    """
    if grid is None:
        grid = default_grid(mapping.dims)
    rows = []
    for r in mapping.levels():
        profiles = np.array([
            support_profile(level_cut(value, r), grid.matrix) for value in mapping.values
        ])
        finite = np.all(np.isfinite(profiles), axis=0)
        rows.extend(
            {"level": r, "direction": k, "integrable": bool(finite[k])}
            for k in range(len(grid))
        )
    return pd.DataFrame(rows)


def integral_nesting_check(
    mapping: FuzzyMapping,
    sets: Sequence[MeasurableSet],
    tol: float = DEFAULT_TOL,
    prune: bool = False
) -> pd.DataFrame:
    """
    For consecutive integral levels r1 < r2, how far level r2 sticks out of level r1.

    Returns:
        DataFrame with columns set, lower, upper, excess; excess is the directed
        Hausdorff distance from the r2 body to the r1 body and is 0 when nested
    """
    rows = []
    for A in sets:
        levels = mapping.levels(A)
        bodies = [level_integral(mapping, A, r, prune) for r in levels]
        label = ",".join(mapping.space.atoms[i] for i in A) or "∅"
        for k in range(len(levels) - 1):
            rows.append({
                "set": label,
                "lower": levels[k],
                "upper": levels[k + 1],
                "excess": directed_hausdorff(bodies[k + 1], bodies[k], tol),
            })
    return pd.DataFrame(rows, columns=["set", "lower", "upper", "excess"])
