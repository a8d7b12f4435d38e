"""Shared fixtures for the fuzzypettis test suite."""

from pathlib import Path

import numpy as np
import pytest

from fuzzypettis.cli.scenario import load_scenario
from fuzzypettis.fuzzy import FuzzyNumber
from fuzzypettis.geometry import ConvexBody
from fuzzypettis.measure import FiniteMeasureSpace, FuzzyMapping

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


@pytest.fixture
def unit_square() -> ConvexBody:
    return ConvexBody(np.array([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]]))


@pytest.fixture
def triangle() -> ConvexBody:
    return ConvexBody(np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]]))


@pytest.fixture
def nested_squares() -> FuzzyNumber:
    """Grade 1 on [-1, 1]^2, grade 0.5 on [-2, 2]^2."""
    return FuzzyNumber((0.5, 1.0), (ConvexBody.box(2.0), ConvexBody.box(1.0)))


@pytest.fixture
def two_atom_mapping() -> FuzzyMapping:
    return load_scenario(FIXTURES / "twoatom.json").mapping


@pytest.fixture
def point_mapping() -> FuzzyMapping:
    """ω1 ↦ χ_{(0,0)} with weight 0.25, ω2 ↦ χ_{(4,0)} with weight 0.75."""
    return load_scenario(FIXTURES / "points.json").mapping


@pytest.fixture
def null_atom_mapping(nested_squares) -> FuzzyMapping:
    """Two positive atoms and one null atom."""
    space = FiniteMeasureSpace(("a", "b", "z"), (1.0, 2.0, 0.0))
    shifted = FuzzyNumber(
        nested_squares.levels,
        tuple(ConvexBody(body.vertices + 5.0) for body in nested_squares.bodies)
    )
    far = FuzzyNumber((1.0,), (ConvexBody(np.array([[100.0, 100.0]])),))
    return FuzzyMapping(space, (nested_squares, shifted, far))
