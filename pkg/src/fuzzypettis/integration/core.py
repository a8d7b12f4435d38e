"""Core of a fuzzy mapping on atomic spaces and domination between mappings."""

from dataclasses import dataclass
from typing import Optional, Sequence

import pandas as pd
from loguru import logger

from ..exceptions import NotDominatedError, NullSetError
from ..fuzzy import FuzzyNumber, level_cut, merged_levels
from ..geometry import ConvexBody, hull_union, scale, subset_of, translate_by_negative
from ..geometry.solver import DEFAULT_TOL
from ..measure import (
    FuzzyMapping,
    MeasurableSet,
    Selection,
    check_compatible,
    mapping_level,
    measure_of,
)

FINITE_DIMENSION_NOTE = "trivially satisfied in finite dimensions"


def core(mapping: FuzzyMapping, E: MeasurableSet, r: float) -> ConvexBody:
    """
    cor_{Γ̃_r}(E) on an atomic space: the hull of Γ̃_r(ω) over positive atoms of E.

    Removing a null set can only drop zero-weight atoms, so the intersection over
    null sets is attained by dropping all of them.

    Raises:
        NullSetError: If μ(E) = 0
    """
    space = mapping.space
    space.validate(E)
    positive = [i for i in E if space.weights[i] > 0]
    if not positive:
        raise NullSetError(f"Core is undefined on the null set {E}", "set")

    view = mapping_level(mapping, r)
    body = view[positive[0]]
    for i in positive[1:]:
        body = hull_union(body, view[i])
    return body


def dominates(G: FuzzyMapping, mapping: FuzzyMapping, tol: float = DEFAULT_TOL) -> bool:
    """True when G̃_r(ω) ⊆ Γ̃_r(ω) for every atom and every merged level."""
    check_compatible(G, mapping)
    for atom, g, gamma in zip(mapping.space.atoms, G.values, mapping.values):
        for r in merged_levels(g, gamma):
            if not subset_of(level_cut(g, r), level_cut(gamma, r), tol):
                logger.debug(f"Domination fails at atom {atom!r}, level {r}")
                return False
    return True


def shrink_toward_selection(
    mapping: FuzzyMapping,
    selection: Selection,
    factor: float
) -> FuzzyMapping:
    """
    Dominated mapping G̃_r(ω) = f(ω) + factor·(Γ̃_r(ω) - f(ω)) for factor in [0, 1].

    ``selection`` must be a selection of Γ̃_1 so it sits in every level.
    """
    values = []
    for i, value in enumerate(mapping.values):
        point = selection[i]
        bodies = tuple(
            translate_by_negative(scale(translate_by_negative(body, point), factor), -point)
            for body in value.bodies
        )
        values.append(FuzzyNumber(value.levels, bodies))
    return FuzzyMapping(mapping.space, tuple(values))


@dataclass(frozen=True, eq=False)
class CoreReport:
    """Rows (set, level, measure, nonempty, vertices) for every checked E in Σ⁺."""

    rows: pd.DataFrame
    note: str = FINITE_DIMENSION_NOTE

    @property
    def passed(self) -> bool:
        return bool(self.rows.empty or self.rows["nonempty"].all())


def core_nonempty_check(
    mapping: FuzzyMapping,
    G: FuzzyMapping,
    sets: Sequence[MeasurableSet],
    levels: Optional[Sequence[float]] = None,
    tol: float = DEFAULT_TOL
) -> CoreReport:
    """
    Check cor_{G̃_r}(E) ≠ ∅ for every E of positive measure and every level.

    Sets of measure zero lie outside Σ⁺ and are skipped.

    Raises:
        NotDominatedError: If G̃ is not dominated by Γ̃
    """
    if not dominates(G, mapping, tol):
        raise NotDominatedError("G is not dominated by the mapping", "G")

    levels = tuple(levels) if levels is not None else G.levels()
    rows = []
    for E in sets:
        mu = measure_of(G.space, E)
        if mu <= 0:
            continue
        for r in levels:
            body = core(G, E, r)
            rows.append({
                "set": ",".join(G.space.atoms[i] for i in E),
                "level": r,
                "measure": mu,
                "nonempty": body.vertex_count > 0,
                "vertices": body.vertex_count,
            })

    report = CoreReport(pd.DataFrame(rows))
    logger.info(f"Core check over {len(rows)} (set, level) pairs: passed={report.passed}")
    return report
