"""Subcommands: integrate, decompose, verify and plot-data."""

import sys
from enum import IntEnum
from functools import wraps
from pathlib import Path
from typing import Callable, Optional, Tuple

import numpy as np
import yaml
from loguru import logger

from ..config import Config
from ..exceptions import FuzzyPettisError, UnsupportedDimensionError
from ..geometry import DirectionGrid, default_grid
from ..integration import (
    decompose,
    fuzzy_pettis_integral,
    integral_additivity_check,
    run_theorem_suite,
)
from ..measure import canonical_mapping_selection
from .output import (
    level_family_frame,
    membership_grid_frame,
    polygon_frame,
    write_decomposition,
    write_frame,
    write_level_family,
    write_report,
)
from .scenario import (
    Scenario,
    dump_scenario,
    integral_scenario,
    load_scenario,
    parse_direction,
    parse_set_spec,
)


class ExitCode(IntEnum):
    OK = 0
    VALIDATION = 2
    BREACH = 3
    IO = 4


def exit_code_for(error: Exception) -> ExitCode:
    return ExitCode.IO if isinstance(error, OSError) else ExitCode.VALIDATION


def report_errors(command: Callable[..., ExitCode]) -> Callable[..., ExitCode]:
    """Turn validation and I/O errors into exit codes with a message on stderr."""

    @wraps(command)
    def wrapper(*args, **kwargs) -> ExitCode:
        try:
            return command(*args, **kwargs)
        except (FuzzyPettisError, OSError, ValueError, yaml.YAMLError) as e:
            code = exit_code_for(e)
            label = "I/O error" if code == ExitCode.IO else "Invalid input"
            print(f"❌ {label}: {e}", file=sys.stderr)
            logger.debug(f"{command.__name__} failed with exit code {int(code)}")
            return code

    return wrapper


def _settings(config: Config, scenario: Scenario) -> Config:
    """Scenario tolerances and grid size on top of the configuration."""
    for name, value in scenario.tolerances.items():
        config.set(f"tolerances.{name}", value)
    if scenario.grid_size is not None:
        key = "grid.size_2d" if scenario.dims <= 2 else "grid.sample_3d"
        config.set(key, scenario.grid_size)
    return config


def _apply_flags(config: Config, dims: int, grid: Optional[int], tol: Optional[float]) -> None:
    if tol is not None:
        config.set("tolerances.distance", tol)
    if grid is not None:
        config.set("grid.size_2d" if dims <= 2 else "grid.sample_3d", grid)


def _load(
    scenario_path: str,
    config: Optional[Config],
    grid: Optional[int],
    tol: Optional[float]
) -> Tuple[Scenario, Config, DirectionGrid]:
    config = config if config is not None else Config()
    scenario = load_scenario(scenario_path, tol, config.distance_tol)
    _settings(config, scenario)
    _apply_flags(config, scenario.dims, grid, tol)
    directions = default_grid(
        scenario.dims, config.grid_size_2d, config.grid_sample_3d, config.grid_seed
    )
    return scenario, config, directions


@report_errors
def cmd_integrate(
    scenario_path: str,
    set_spec: str = "all",
    out_dir: Optional[str] = None,
    config: Optional[Config] = None,
    grid: Optional[int] = None,
    tol: Optional[float] = None
) -> ExitCode:
    """
    Integrate the scenario mapping over a set.

    Writes integral_levels.csv, residuals.csv and integral.json (the integral as a
    single-atom scenario) into ``out_dir``; prints the level family otherwise.
    Exit 3 when a support residual exceeds the support tolerance.
    """
    scenario, config, directions = _load(scenario_path, config, grid, tol)
    A = parse_set_spec(scenario.space, set_spec)
    result = fuzzy_pettis_integral(
        scenario.mapping, A, directions, config.distance_tol, config.support_tol,
        config.prune_vertices
    )

    if out_dir:
        out = Path(out_dir)
        write_level_family(result.value, out / "integral_levels.csv")
        write_frame(result.residual_report, out / "residuals.csv")
        dump_scenario(integral_scenario(result.value), out / "integral.json")
    else:
        print(level_family_frame(result.value).to_string(index=False))

    print(f"max support residual {result.max_residual:.3e}")
    if not result.passed:
        return ExitCode.BREACH
    return ExitCode.OK


@report_errors
def cmd_decompose(
    scenario_path: str,
    direction: Optional[str] = None,
    out_dir: Optional[str] = None,
    config: Optional[Config] = None,
    grid: Optional[int] = None,
    tol: Optional[float] = None
) -> ExitCode:
    """
    Split the mapping around the canonical selection in ``direction``.

    Writes selection.csv, decomposed_levels.csv and checks.csv into ``out_dir``.
    Exit 0 only when every per-atom check and the integral split pass.
    """
    scenario, config, directions = _load(scenario_path, config, grid, tol)
    if direction is None:
        u = parse_direction(np.eye(scenario.dims)[0].tolist(), scenario.dims)
    else:
        u = parse_direction(direction, scenario.dims)

    selection = canonical_mapping_selection(scenario.mapping, u)
    result = decompose(
        scenario.mapping, selection, directions, config.distance_tol, config.decomposition_tol
    )
    split = integral_additivity_check(
        scenario.mapping, result, scenario.space.full_set(), config.distance_tol,
        config.prune_vertices
    )

    if out_dir:
        write_decomposition(result, out_dir)
    else:
        print(result.checks.to_string(index=False))

    print(
        f"reconstruction {result.max_reconstruction:.3e}, integral split {split:.3e}"
    )
    if not (result.passed and split <= config.support_tol):
        return ExitCode.BREACH
    return ExitCode.OK


@report_errors
def cmd_verify(
    scenario_path: str,
    with_oracle: bool = False,
    tail: Optional[Tuple[float, int]] = None,
    seed: Optional[int] = None,
    out_dir: Optional[str] = None,
    config: Optional[Config] = None,
    grid: Optional[int] = None,
    tol: Optional[float] = None
) -> ExitCode:
    """Run the structural check suite and print the report table; exit 0 iff nothing fails."""
    scenario, config, directions = _load(scenario_path, config, grid, tol)
    report = run_theorem_suite(
        scenario.mapping,
        grid=directions,
        tol=config.distance_tol,
        support_tol=config.support_tol,
        atom_tol=config.atom_tol,
        seed=config.verify_seed if seed is None else seed,
        with_oracle=with_oracle,
        tail=tail,
        lambdas=config.linearity_lambdas,
        partition_parts=config.partition_parts,
        prune=config.prune_vertices,
        oracle_divisions=config.oracle_grid_divisions,
    )

    print(report.to_table())
    if out_dir:
        write_report(report, Path(out_dir) / "report.csv")
    return ExitCode.OK if report.passed else ExitCode.BREACH


@report_errors
def cmd_plot_data(
    scenario_path: str,
    out_dir: Optional[str] = None,
    set_spec: Optional[str] = None,
    config: Optional[Config] = None,
    tol: Optional[float] = None
) -> ExitCode:
    """
    Emit ordered level polygons and a membership grid for a planar scenario.

    Plots every atom's value, or the integral over ``set_spec`` when given.
    Writes polygons.csv and membership_grid.csv into ``out_dir``.
    """
    scenario, config, _ = _load(scenario_path, config, None, tol)
    if scenario.dims != 2:
        raise UnsupportedDimensionError(
            f"plot-data needs a planar scenario, got d = {scenario.dims}", "dims"
        )

    if set_spec is None:
        values = dict(zip(scenario.space.atoms, scenario.mapping.values))
    else:
        A = parse_set_spec(scenario.space, set_spec)
        values = {
            "integral": fuzzy_pettis_integral(
                scenario.mapping, A, tol=config.distance_tol, prune=config.prune_vertices
            ).value
        }

    polygons = polygon_frame(values)
    if out_dir:
        out = Path(out_dir)
        write_frame(polygons, out / "polygons.csv")
        grades = membership_grid_frame(values, tol=config.distance_tol)
        write_frame(grades, out / "membership_grid.csv")
    else:
        print(polygons.to_string(index=False))
    return ExitCode.OK
