"""Tests for the fuzzy Pettis integral."""

import numpy as np
import pytest

from fuzzypettis.cli.scenario import load_scenario
from fuzzypettis.exceptions import InvalidSetError
from fuzzypettis.fuzzy import Grade, fuzzy_hausdorff
from fuzzypettis.geometry import ConvexBody, default_grid, hausdorff
from fuzzypettis.integration import pettis
from fuzzypettis.integration import (
    fuzzy_pettis_integral,
    integral_membership,
    integral_nesting_check,
    level_integral,
    scalar_integrability,
    scalar_integral,
)
from fuzzypettis.measure import MeasurableSet, random_mapping

EXPECTED_TWO_ATOM = {
    0.25: [[0, 0], [7, 0], [7, 1], [1, 7], [0, 7]],
    0.5: [[1.5, 1.5], [4, 1.5], [4, 2.5], [2.5, 4], [1.5, 4]],
    1.0: [[1.75, 1.75], [3.75, 1.75], [3.75, 2.25], [2.25, 3.75], [1.75, 3.75]],
}


class TestTwoAtomIntegral:

    def test_levels(self, two_atom_mapping):
        result = fuzzy_pettis_integral(two_atom_mapping, two_atom_mapping.space.full_set())
        assert result.value.levels == (0.25, 0.5, 1.0)

    @pytest.mark.parametrize("prune", [False, True])
    def test_level_bodies(self, two_atom_mapping, prune):
        result = fuzzy_pettis_integral(
            two_atom_mapping, two_atom_mapping.space.full_set(), prune=prune
        )
        for r, body in zip(result.value.levels, result.value.bodies):
            expected = ConvexBody(np.array(EXPECTED_TWO_ATOM[r], dtype=float))
            assert hausdorff(body, expected) <= 1e-9

    def test_pruned_vertex_counts(self, two_atom_mapping):
        result = fuzzy_pettis_integral(
            two_atom_mapping, two_atom_mapping.space.full_set(), prune=True
        )
        assert [body.vertex_count for body in result.value.bodies] == [5, 5, 5]

    def test_support_identity(self, two_atom_mapping):
        result = fuzzy_pettis_integral(two_atom_mapping, two_atom_mapping.space.full_set())
        assert result.passed
        assert result.max_residual <= 1e-9
        assert len(result.residual_report) == 3 * 64

    def test_scalar_integral(self, two_atom_mapping):
        full = two_atom_mapping.space.full_set()
        assert scalar_integral(two_atom_mapping, full, [1.0, 0.0], 1.0) == pytest.approx(3.75)

    @pytest.mark.parametrize("point, grade", [
        ([2.0, 2.0], 1.0),
        ([3.9, 2.0], 0.5),
        ([6.0, 0.5], 0.25),
        ([8.0, 0.0], 0.0),
    ])
    def test_membership(self, two_atom_mapping, point, grade):
        full = two_atom_mapping.space.full_set()
        assert integral_membership(two_atom_mapping, full, point) == Grade(grade)


class TestDegenerateIntegrals:

    def test_theta(self, fixtures_dir):
        mapping = load_scenario(fixtures_dir / "theta.json").mapping
        value = fuzzy_pettis_integral(mapping, mapping.space.full_set()).value
        assert value.levels == (1.0,)
        np.testing.assert_array_equal(value.core_body.vertices, [[0.0, 0.0]])

    def test_empty_set_gives_theta(self, two_atom_mapping):
        value = fuzzy_pettis_integral(two_atom_mapping, MeasurableSet.empty()).value
        assert value.levels == (1.0,)
        assert not value.core_body.vertices.any()

    def test_point_valued(self, point_mapping):
        value = fuzzy_pettis_integral(point_mapping, point_mapping.space.full_set()).value
        assert value.levels == (1.0,)
        np.testing.assert_allclose(value.core_body.vertices, [[3.0, 0.0]])

    def test_zero_weight_atoms_skipped(self, null_atom_mapping):
        space = null_atom_mapping.space
        with_null = fuzzy_pettis_integral(null_atom_mapping, space.full_set()).value
        without = fuzzy_pettis_integral(null_atom_mapping, space.subset(["a", "b"])).value
        assert fuzzy_hausdorff(with_null, without) <= 1e-12
        only_null = level_integral(null_atom_mapping, space.subset(["z"]), 1.0)
        np.testing.assert_array_equal(only_null.vertices, [[0.0, 0.0]])

    def test_invalid_set(self, two_atom_mapping):
        with pytest.raises(InvalidSetError):
            fuzzy_pettis_integral(two_atom_mapping, MeasurableSet(frozenset({5})))

    @pytest.mark.parametrize("index", [-1, 2])
    def test_out_of_range_index_rejected_before_levels(self, two_atom_mapping, index):
        with pytest.raises(InvalidSetError):
            two_atom_mapping.levels(MeasurableSet(frozenset({index})))
        with pytest.raises(InvalidSetError):
            fuzzy_pettis_integral(two_atom_mapping, MeasurableSet(frozenset({0, index})))

    def test_nesting_checked_on_extreme_points(self, monkeypatch, two_atom_mapping):
        checked = []
        monkeypatch.setattr(
            pettis, "check_nesting", lambda levels, bodies, tol: checked.extend(bodies)
        )
        fuzzy_pettis_integral(two_atom_mapping, two_atom_mapping.space.full_set())
        assert [body.vertex_count for body in checked] == [5, 5, 5]


class TestRandomScenarios:

    @pytest.mark.parametrize("dims", [1, 2, 3])
    def test_support_identity_holds(self, rng, dims):
        grid = default_grid(dims, size_2d=32, sample=32)
        for _ in range(10):
            mapping = random_mapping(rng, dims, max_atoms=4, max_vertices=6)
            result = fuzzy_pettis_integral(mapping, mapping.space.full_set(), grid, prune=True)
            assert result.max_residual <= 1e-9

    def test_support_identity_at_full_size(self, rng):
        grids = {
            1: default_grid(1),
            2: default_grid(2, size_2d=64),
            3: default_grid(3, sample=58),
        }
        for trial in range(100):
            dims = 1 + trial % 3
            mapping = random_mapping(rng, dims, max_atoms=8, max_levels=4, max_vertices=10)
            result = fuzzy_pettis_integral(mapping, mapping.space.full_set(), grids[dims])
            assert result.max_residual <= 1e-9

    def test_pruning_does_not_change_the_integral(self, rng):
        for _ in range(10):
            mapping = random_mapping(rng, 2, max_atoms=3, max_vertices=5)
            full = mapping.space.full_set()
            raw = fuzzy_pettis_integral(mapping, full).value
            pruned = fuzzy_pettis_integral(mapping, full, prune=True).value
            assert fuzzy_hausdorff(raw, pruned) <= 1e-9


class TestIntegralDiagnostics:

    def test_scalar_integrability(self, two_atom_mapping):
        table = scalar_integrability(two_atom_mapping, default_grid(2, size_2d=16))
        assert len(table) == 3 * 16
        assert table["integrable"].all()

    def test_nesting_check(self, two_atom_mapping):
        space = two_atom_mapping.space
        table = integral_nesting_check(two_atom_mapping, [space.full_set(), space.subset(["w1"])])
        assert list(table["set"]) == ["w1,w2", "w1,w2", "w1"]
        assert (table["excess"] <= 1e-9).all()
        assert list(table["lower"]) == [0.25, 0.5, 0.5]
