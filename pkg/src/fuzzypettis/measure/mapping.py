"""Simple fuzzy mappings on finite measure spaces, their level views and selections."""

import math
from collections.abc import Sequence as SequenceABC
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple, Union

import numpy as np
from loguru import logger

from ..exceptions import DimensionMismatchError, FuzzyPettisError, NotASelectionError
from ..fuzzy import (
    FuzzyNumber,
    add,
    fuzzy_from_point,
    level_cut,
    merged_levels,
    scale_fuzzy,
)
from ..geometry import ConvexBody, Direction, canonical_selection, contains
from ..geometry.solver import DEFAULT_TOL
from .space import FiniteMeasureSpace, MeasurableSet


@dataclass(frozen=True, eq=False)
class FuzzyMapping:
    """Γ̃: one fuzzy number per atom of a finite measure space."""

    space: FiniteMeasureSpace
    values: Tuple[FuzzyNumber, ...]

    def __post_init__(self):
        values = tuple(self.values)
        if len(values) != len(self.space):
            raise FuzzyPettisError(
                f"Mapping has {len(values)} values for {len(self.space)} atoms", "mapping"
            )
        dims = values[0].dims
        for atom, value in zip(self.space.atoms, values):
            if value.dims != dims:
                raise DimensionMismatchError(
                    f"Value at atom {atom!r} has dimension {value.dims}, expected {dims}"
                )
        object.__setattr__(self, "values", values)

    @property
    def dims(self) -> int:
        return self.values[0].dims

    def __getitem__(self, index: int) -> FuzzyNumber:
        return self.values[index]

    def __len__(self) -> int:
        return len(self.values)

    def levels(self, A: Optional[MeasurableSet] = None) -> Tuple[float, ...]:
        """Union of the stored levels of the atoms in A (all atoms by default), plus 1."""
        if A is not None:
            self.space.validate(A)
        indices = range(len(self.values)) if A is None else list(A)
        numbers = [self.values[i] for i in indices]
        return tuple(sorted(set(merged_levels(*numbers)) | {1.0})) if numbers else (1.0,)

    def __repr__(self) -> str:
        return f"<FuzzyMapping atoms={len(self.space)} d={self.dims}>"


class LevelView(SequenceABC):
    """Atom-indexed view ω ↦ Γ̃_r(ω)."""

    def __init__(self, mapping: FuzzyMapping, r: float):
        self.mapping = mapping
        self.r = r
        self._bodies = tuple(level_cut(value, r) for value in mapping.values)

    def __getitem__(self, index: int) -> ConvexBody:
        return self._bodies[index]

    def __len__(self) -> int:
        return len(self._bodies)


def mapping_level(mapping: FuzzyMapping, r: float) -> LevelView:
    return LevelView(mapping, r)


@dataclass(frozen=True, eq=False)
class Selection:
    """One point per atom; ``level`` records the level it was checked against."""

    points: np.ndarray
    level: Optional[float] = None

    def __post_init__(self):
        points = np.atleast_2d(np.asarray(self.points, dtype=float))
        points.setflags(write=False)
        object.__setattr__(self, "points", points)

    @property
    def dims(self) -> int:
        return self.points.shape[1]

    def __getitem__(self, index: int) -> np.ndarray:
        return self.points[index]

    def __len__(self) -> int:
        return self.points.shape[0]


def make_selection(
    mapping: FuzzyMapping,
    points: Union[np.ndarray, Sequence[Sequence[float]]],
    r: float = 1.0,
    tol: float = DEFAULT_TOL
) -> Selection:
    """
    Validate that points form a selection of Γ̃_r.

    Raises:
        NotASelectionError: If some f(ω) lies outside Γ̃_r(ω) by more than ``tol``
    """
    selection = Selection(points, level=r)
    if len(selection) != len(mapping):
        raise NotASelectionError(
            f"Selection has {len(selection)} points for {len(mapping)} atoms", "selection"
        )
    if selection.dims != mapping.dims:
        raise DimensionMismatchError(
            f"Selection has dimension {selection.dims}, expected {mapping.dims}"
        )
    view = mapping_level(mapping, r)
    for i, atom in enumerate(mapping.space.atoms):
        if not contains(view[i], selection[i], tol):
            raise NotASelectionError(
                f"Point {selection[i].tolist()} is outside "
                f"the level-{r} body at atom {atom!r}",
                f"selection[{atom}]"
            )
    return selection


def canonical_mapping_selection(
    mapping: FuzzyMapping,
    u: Union[Direction, Sequence[float]],
    r: float = 1.0
) -> Selection:
    """Per-atom canonical vertex of Γ̃_r(ω) in direction u; exact membership by construction."""
    view = mapping_level(mapping, r)
    points = np.array([canonical_selection(view[i], u) for i in range(len(view))])
    logger.debug(f"Canonical selection at level {r} over {len(points)} atoms")
    return Selection(points, level=r)


def fuzzy_from_selection(space: FiniteMeasureSpace, selection: Selection) -> FuzzyMapping:
    """ω ↦ χ_{f(ω)}."""
    return FuzzyMapping(space, tuple(fuzzy_from_point(p) for p in selection.points))


def vector_integral(
    space: FiniteMeasureSpace,
    selection: Selection,
    A: MeasurableSet
) -> np.ndarray:
    """Σ_{ω∈A} μ({ω}) f(ω), summed coordinate-wise with fsum."""
    space.validate(A)
    indices = list(A)
    return np.array([
        math.fsum(space.weights[i] * selection[i][k] for i in indices)
        for k in range(selection.dims)
    ])


def add_mappings(F: FuzzyMapping, G: FuzzyMapping) -> FuzzyMapping:
    """Pointwise sum ω ↦ F̃(ω) + G̃(ω)."""
    check_compatible(F, G)
    return FuzzyMapping(F.space, tuple(add(f, g) for f, g in zip(F.values, G.values)))


def scale_mapping(F: FuzzyMapping, k: float) -> FuzzyMapping:
    """Pointwise multiple ω ↦ kF̃(ω)."""
    return FuzzyMapping(F.space, tuple(scale_fuzzy(f, k) for f in F.values))


def check_compatible(F: FuzzyMapping, G: FuzzyMapping) -> None:
    if F.space != G.space:
        raise FuzzyPettisError("Mappings live on different measure spaces", "space")
    if F.dims != G.dims:
        raise DimensionMismatchError(f"Mappings have dims {F.dims} and {G.dims}")
