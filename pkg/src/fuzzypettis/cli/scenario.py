"""Scenario documents: a measure space and a fuzzy mapping in one JSON file."""

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

import numpy as np
from loguru import logger

from ..exceptions import DimensionMismatchError, FuzzyPettisError, ScenarioError, ScenarioParseError
from ..fuzzy import FuzzyNumber, from_level_family
from ..geometry import ConvexBody, Direction
from ..geometry.solver import DEFAULT_TOL
from ..measure import FiniteMeasureSpace, FuzzyMapping, MeasurableSet

PathLike = Union[str, Path]


@dataclass(frozen=True, eq=False)
class Scenario:
    """
    Validated scenario.

    Example document::

        {
          "dims": 2,
          "atoms": [
            {"id": "w1", "weight": 0.5,
             "levels": [{"level": 0.5, "vertices": [[0, 0], [2, 0], [0, 2]]},
                        {"level": 1.0, "vertices": [[0, 0], [1, 0], [0, 1]]}]}
          ],
          "grid": 64,
          "tolerances": {"distance": 1e-9}
        }
    """

    dims: int
    space: FiniteMeasureSpace
    mapping: FuzzyMapping
    grid_size: Optional[int] = None
    tolerances: Dict[str, float] = field(default_factory=dict)


def _require(condition: bool, message: str, field_name: str) -> None:
    if not condition:
        raise ScenarioError(message, field_name)


def _is_number(value: Any) -> bool:
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def _parse_vertices(raw: Any, dims: int, where: str) -> ConvexBody:
    _require(
        isinstance(raw, list) and len(raw) > 0,
        "Vertex list must be a nonempty list", where
    )
    for k, vertex in enumerate(raw):
        _require(
            isinstance(vertex, list) and all(_is_number(c) for c in vertex),
            "Vertex must be a list of numbers", f"{where}[{k}]"
        )
        if len(vertex) != dims:
            raise DimensionMismatchError(
                f"Vertex has {len(vertex)} coordinates, expected {dims}", f"{where}[{k}]"
            )
    return ConvexBody(np.array(raw, dtype=float))


def _parse_atom(raw: Any, index: int, dims: int, tol: float):
    where = f"atoms[{index}]"
    _require(isinstance(raw, dict), "Atom must be an object", where)
    atom_id = raw.get("id")
    _require(isinstance(atom_id, str) and atom_id != "", "Atom id must be a string", f"{where}.id")
    weight = raw.get("weight")
    _require(
        _is_number(weight) and np.isfinite(weight) and weight >= 0,
        f"Weight must be a finite number >= 0, got {weight!r}", f"{where}.weight"
    )
    levels_raw = raw.get("levels")
    _require(
        isinstance(levels_raw, list) and len(levels_raw) > 0,
        "Levels must be a nonempty list", f"{where}.levels"
    )

    levels: List[float] = []
    bodies: List[ConvexBody] = []
    for j, entry in enumerate(levels_raw):
        at = f"{where}.levels[{j}]"
        _require(isinstance(entry, dict), "Level entry must be an object", at)
        _require(_is_number(entry.get("level")), "Level must be a number", f"{at}.level")
        levels.append(float(entry["level"]))
        bodies.append(_parse_vertices(entry.get("vertices"), dims, f"{at}.vertices"))

    try:
        value = from_level_family(levels, bodies, tol)
    except FuzzyPettisError as e:
        e.field = f"{where}.{e.field}" if e.field else where
        raise
    return atom_id, float(weight), value


def scenario_from_dict(
    document: Any,
    tol: Optional[float] = None,
    fallback_tol: float = DEFAULT_TOL
) -> Scenario:
    """
    Validate a decoded scenario document.

    Level nesting is checked with ``tol`` when given, else with the document's own
    ``tolerances.distance``, else with ``fallback_tol``.

    Raises:
        ScenarioError: On a malformed document, naming the offending field
        NestingViolationError: When some atom's level family is not nested
        LevelRangeError: On levels outside (0, 1] or not ending at 1
    """
    _require(isinstance(document, dict), "Scenario must be a JSON object", "scenario")
    dims = document.get("dims")
    _require(
        isinstance(dims, int) and not isinstance(dims, bool) and dims >= 1,
        f"dims must be a positive integer, got {dims!r}", "dims"
    )
    atoms_raw = document.get("atoms")
    _require(
        isinstance(atoms_raw, list) and len(atoms_raw) > 0, "atoms must be a nonempty list", "atoms"
    )

    grid_size = document.get("grid")
    if grid_size is not None:
        _require(
            isinstance(grid_size, int) and not isinstance(grid_size, bool) and grid_size >= 2,
            f"grid must be an integer >= 2, got {grid_size!r}", "grid"
        )
    tolerances = document.get("tolerances", {})
    _require(isinstance(tolerances, dict), "tolerances must be an object", "tolerances")
    for name, value in tolerances.items():
        _require(
            _is_number(value) and value > 0, "Tolerance must be positive", f"tolerances.{name}"
        )

    if tol is None:
        tol = float(tolerances.get("distance", fallback_tol))
    parsed = [_parse_atom(raw, i, dims, tol) for i, raw in enumerate(atoms_raw)]
    ids = [atom_id for atom_id, _, _ in parsed]
    _require(len(set(ids)) == len(ids), "Atom ids must be unique", "atoms")

    space = FiniteMeasureSpace(tuple(ids), tuple(weight for _, weight, _ in parsed))
    mapping = FuzzyMapping(space, tuple(value for _, _, value in parsed))
    logger.debug(f"Loaded scenario with {len(space)} atoms in d = {dims}")
    return Scenario(dims, space, mapping, grid_size, {k: float(v) for k, v in tolerances.items()})


def load_scenario(
    path: PathLike,
    tol: Optional[float] = None,
    fallback_tol: float = DEFAULT_TOL
) -> Scenario:
    """
    Read and validate a scenario file; tolerances resolve as in scenario_from_dict.

    Raises:
        OSError: If the file cannot be read
        ScenarioParseError: If the file is not valid JSON
    """
    text = Path(path).read_text(encoding="utf-8")
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise ScenarioParseError(
            f"Invalid JSON: {e.msg}", f"line {e.lineno} column {e.colno}"
        ) from e
    return scenario_from_dict(document, tol, fallback_tol)


def fuzzy_to_levels(value: FuzzyNumber) -> List[Dict[str, Any]]:
    return [
        {"level": r, "vertices": body.vertices.tolist()}
        for r, body in zip(value.levels, value.bodies)
    ]


def scenario_to_dict(mapping: FuzzyMapping, grid_size: Optional[int] = None) -> Dict[str, Any]:
    document: Dict[str, Any] = {
        "dims": mapping.dims,
        "atoms": [
            {"id": atom, "weight": weight, "levels": fuzzy_to_levels(value)}
            for atom, weight, value in zip(
                mapping.space.atoms, mapping.space.weights, mapping.values
            )
        ],
    }
    if grid_size is not None:
        document["grid"] = grid_size
    return document


def integral_scenario(value: FuzzyNumber, atom_id: str = "integral") -> Dict[str, Any]:
    """A single-atom, unit-weight scenario carrying ``value``; reloads with load_scenario."""
    space = FiniteMeasureSpace((atom_id,), (1.0,))
    return scenario_to_dict(FuzzyMapping(space, (value,)))


def dump_scenario(document: Dict[str, Any], path: PathLike) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(document, indent=2) + "\n", encoding="utf-8")


def parse_set_spec(space: FiniteMeasureSpace, spec: str) -> MeasurableSet:
    """``all``, ``none`` or a comma-separated list of atom ids."""
    text = spec.strip()
    if text.lower() == "all":
        return space.full_set()
    if text.lower() in ("none", "empty", ""):
        return MeasurableSet.empty()
    return space.subset(part.strip() for part in text.split(",") if part.strip())


def parse_direction(text: Union[str, Sequence[float]], dims: int) -> Direction:
    """Comma-separated coordinates, normalised with a warning when far from unit length."""
    if isinstance(text, str):
        try:
            coords = [float(part) for part in text.split(",")]
        except ValueError as e:
            raise ScenarioError(f"Cannot parse direction {text!r}", "direction") from e
    else:
        coords = [float(c) for c in text]
    if len(coords) != dims:
        raise DimensionMismatchError(
            f"Direction has {len(coords)} coordinates, expected {dims}", "direction"
        )
    return Direction.from_vector(coords)
