"""CSV writers for integrals, decompositions, reports and plot data."""

from pathlib import Path
from typing import Dict, Union

import numpy as np
import pandas as pd
from loguru import logger

from ..fuzzy import FuzzyNumber, describe, membership
from ..geometry import ordered_polygon
from ..geometry.solver import DEFAULT_TOL
from ..integration import DecompositionResult, VerificationReport

PathLike = Union[str, Path]
FLOAT_FORMAT = "%.12g"
MEMBERSHIP_RESOLUTION = 41


def _write(frame: pd.DataFrame, path: PathLike) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    frame.to_csv(path, index=False, float_format=FLOAT_FORMAT)
    logger.info(f"Wrote {len(frame)} rows to {path}")
    return path


def level_family_frame(value: FuzzyNumber) -> pd.DataFrame:
    """Columns level, vertex, x1..xd."""
    return pd.DataFrame(describe(value))


def write_level_family(value: FuzzyNumber, path: PathLike) -> Path:
    return _write(level_family_frame(value), path)


def write_frame(frame: pd.DataFrame, path: PathLike) -> Path:
    return _write(frame, path)


def write_decomposition(result: DecompositionResult, out_dir: PathLike) -> Dict[str, Path]:
    """selection.csv (f per atom), decomposed_levels.csv (G̃ level families), checks.csv."""
    out_dir = Path(out_dir)
    space = result.G.space
    dims = result.f.dims

    selection = pd.DataFrame(
        [
            {"atom": atom, **{f"f{k + 1}": float(point[k]) for k in range(dims)}}
            for atom, point in zip(space.atoms, result.f.points)
        ]
    )
    levels = pd.DataFrame(
        [
            {"atom": atom, **row}
            for atom, value in zip(space.atoms, result.G.values)
            for row in describe(value)
        ]
    )
    return {
        "selection": _write(selection, out_dir / "selection.csv"),
        "levels": _write(levels, out_dir / "decomposed_levels.csv"),
        "checks": _write(result.checks, out_dir / "checks.csv"),
    }


def write_report(report: VerificationReport, path: PathLike) -> Path:
    return _write(report.formatted(), path)


def polygon_frame(values: Dict[str, FuzzyNumber]) -> pd.DataFrame:
    """
    Ordered 2-D level polygons.

    Columns label, level, order, x1, x2; within a level the vertices run
    counterclockwise from the lexicographically smallest one.
    """
    rows = []
    for label, value in values.items():
        for r, body in zip(value.levels, value.bodies):
            for order, (x1, x2) in enumerate(ordered_polygon(body)):
                rows.append({"label": label, "level": r, "order": order, "x1": x1, "x2": x2})
    return pd.DataFrame(rows, columns=["label", "level", "order", "x1", "x2"])


def membership_grid_frame(
    values: Dict[str, FuzzyNumber],
    resolution: int = MEMBERSHIP_RESOLUTION,
    tol: float = DEFAULT_TOL
) -> pd.DataFrame:
    """
    Grades on a regular grid over the joint bounding box of the supports.

    Columns x1, x2 and one grade column per label; grades are 0 or stored levels.
    """
    stacked = np.vstack([value.support_body.vertices for value in values.values()])
    lower, upper = stacked.min(axis=0), stacked.max(axis=0)
    axes = [np.linspace(lower[k], upper[k], resolution) for k in range(2)]
    mesh = np.meshgrid(*axes, indexing="ij")
    points = np.column_stack([m.reshape(-1) for m in mesh])

    frame = pd.DataFrame({"x1": points[:, 0], "x2": points[:, 1]})
    for label, value in values.items():
        frame[label] = [float(membership(value, x, tol)) for x in points]
    return frame
