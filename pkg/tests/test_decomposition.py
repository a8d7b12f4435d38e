"""Tests for splitting a mapping around a selection."""

import numpy as np
import pytest

from fuzzypettis.cli.scenario import load_scenario
from fuzzypettis.exceptions import NotASelectionError
from fuzzypettis.integration import decompose, integral_additivity_check
from fuzzypettis.measure import canonical_mapping_selection, random_mapping


@pytest.fixture
def squares(fixtures_dir):
    return load_scenario(fixtures_dir / "squares.json").mapping


class TestDecompose:

    def test_squares_along_first_axis(self, squares):
        selection = canonical_mapping_selection(squares, [1.0, 0.0])
        np.testing.assert_array_equal(selection.points, [[1.0, 1.0]])

        result = decompose(squares, selection)
        assert result.passed
        assert result.max_reconstruction <= 1e-12
        core = result.G.values[0].core_body
        assert sorted(map(tuple, core.vertices.tolist())) == [
            (-2.0, -2.0), (-2.0, 0.0), (0.0, -2.0), (0.0, 0.0)
        ]

    def test_check_table(self, squares):
        result = decompose(squares, canonical_mapping_selection(squares, [1.0, 0.0]))
        assert list(result.checks["level"]) == [0.5, 1.0]
        assert result.checks["zero_member"].all()
        assert (result.checks["min_support"] >= 0.0).all()

    def test_point_mapping_leaves_theta(self, point_mapping):
        selection = canonical_mapping_selection(point_mapping, [0.0, 1.0])
        result = decompose(point_mapping, selection)
        for value in result.G.values:
            assert value.levels == (1.0,)
            assert not value.core_body.vertices.any()

    def test_rejects_non_selection(self, squares):
        with pytest.raises(NotASelectionError):
            decompose(squares, np.array([[5.0, 5.0]]))

    def test_interior_selection(self, two_atom_mapping):
        result = decompose(two_atom_mapping, np.array([[1.0, 1.0], [1.25, 1.25]]))
        assert result.passed


class TestIntegralSplit:

    def test_two_atom(self, two_atom_mapping):
        selection = canonical_mapping_selection(two_atom_mapping, [0.0, 1.0])
        result = decompose(two_atom_mapping, selection)
        residual = integral_additivity_check(
            two_atom_mapping, result, two_atom_mapping.space.full_set()
        )
        assert residual <= 1e-9

    def test_random_mappings(self, rng):
        for _ in range(10):
            mapping = random_mapping(rng, 2, max_atoms=4, max_vertices=5)
            selection = canonical_mapping_selection(mapping, [0.6, 0.8])
            result = decompose(mapping, selection)
            assert result.passed
            residual = integral_additivity_check(
                mapping, result, mapping.space.full_set(), prune=True
            )
            assert residual <= 1e-9
