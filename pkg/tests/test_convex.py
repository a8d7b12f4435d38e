"""Tests for the convex polytope kernel."""

import math

import numpy as np
import pytest

from fuzzypettis.exceptions import ConvergenceError, DimensionMismatchError, FuzzyPettisError
from fuzzypettis.geometry import (
    ConvexBody,
    Direction,
    canonical_selection,
    contains,
    default_grid,
    distance,
    hausdorff,
    hausdorff_support_estimate,
    hull_union,
    min_norm_point,
    minkowski_add,
    prune_redundant,
    scale,
    subset_of,
    support,
    support_profile,
    translate_by_negative,
)
from fuzzypettis.geometry import solver
from fuzzypettis.geometry.solver import min_norm_point_of


def random_body(rng, dims=2, max_vertices=6):
    n = int(rng.integers(1, max_vertices + 1))
    return ConvexBody(rng.normal(scale=2.0, size=(n, dims)))


class TestDirection:

    def test_unit_vector_accepted(self):
        u = Direction(np.array([0.6, 0.8]))
        assert u.dims == 2

    def test_non_unit_rejected(self):
        with pytest.raises(FuzzyPettisError):
            Direction(np.array([1.0, 1.0]))

    def test_from_vector_normalises(self):
        u = Direction.from_vector([3.0, 4.0])
        np.testing.assert_allclose(u.coords, [0.6, 0.8])

    def test_zero_vector_rejected(self):
        with pytest.raises(FuzzyPettisError):
            Direction.from_vector([0.0, 0.0])

    def test_negation(self):
        u = Direction.from_vector([1.0, 0.0])
        np.testing.assert_array_equal((-u).coords, [-1.0, 0.0])


class TestConvexBody:

    def test_rejects_empty_vertex_list(self):
        with pytest.raises(FuzzyPettisError):
            ConvexBody(np.zeros((0, 2)))

    def test_rejects_non_finite(self):
        with pytest.raises(FuzzyPettisError):
            ConvexBody(np.array([[0.0, np.inf]]))

    def test_vertices_read_only(self, unit_square):
        with pytest.raises(ValueError):
            unit_square.vertices[0, 0] = 5.0

    def test_box_corners(self):
        box = ConvexBody.box(1.0, dims=3)
        assert box.vertex_count == 8
        assert box.max_vertex_norm() == pytest.approx(math.sqrt(3.0))


class TestSupport:

    def test_square_along_axis(self, unit_square):
        assert support(unit_square, [1.0, 0.0]) == 1.0

    def test_singleton(self):
        assert support(ConvexBody.singleton([2.0, 3.0]), [0.0, 1.0]) == 3.0

    def test_triangle_along_diagonal(self, triangle):
        u = Direction.from_vector([1.0, 1.0])
        assert support(triangle, u) == pytest.approx(1.0 / math.sqrt(2.0), abs=1e-15)

    def test_dimension_mismatch(self, unit_square):
        with pytest.raises(DimensionMismatchError):
            support(unit_square, [1.0, 0.0, 0.0])

    def test_profile_matches_pointwise(self, triangle):
        grid = default_grid(2, size_2d=16)
        profile = support_profile(triangle, grid.matrix)
        expected = [support(triangle, u) for u in grid]
        np.testing.assert_allclose(profile, expected)


class TestArithmetic:

    def test_minkowski_support_is_additive(self, rng):
        grid = default_grid(3)
        for _ in range(20):
            A, B = random_body(rng, 3), random_body(rng, 3)
            np.testing.assert_allclose(
                support_profile(minkowski_add(A, B), grid.matrix),
                support_profile(A, grid.matrix) + support_profile(B, grid.matrix),
                atol=1e-12,
            )

    def test_scale_by_zero_is_origin(self, unit_square):
        zero = scale(unit_square, 0.0)
        assert zero.vertex_count == 1
        assert not zero.vertices.any()

    def test_negative_scale_flips_support(self, triangle):
        u = np.array([1.0, 0.0])
        assert support(scale(triangle, -2.0), u) == pytest.approx(2.0 * support(triangle, -u))

    def test_translate(self, unit_square):
        moved = translate_by_negative(unit_square, [1.0, 1.0])
        assert support(moved, [1.0, 0.0]) == 0.0
        assert support(moved, [-1.0, 0.0]) == 1.0

    def test_hull_union(self, unit_square):
        far = ConvexBody.singleton([3.0, 0.0])
        joined = hull_union(unit_square, far)
        assert contains(joined, [2.0, 0.25])
        assert support(joined, [1.0, 0.0]) == 3.0


class TestDistance:

    def test_outside_point(self, unit_square):
        assert distance([2.0, 0.5], unit_square) == pytest.approx(1.0, abs=1e-9)

    def test_inside_point(self, unit_square):
        assert distance([0.25, 0.75], unit_square) <= 1e-9

    @pytest.mark.parametrize("point, inside", [
        ([0.5, 0.5], True),
        ([0.5, 0.0], True),
        ([1.0, 1.0], True),
        ([5.0, 5.0], False),
        ([1.0 + 1e-6, 0.5], False),
    ])
    def test_contains(self, unit_square, point, inside):
        assert contains(unit_square, point) is inside

    def test_min_norm_point_of_shifted_square(self):
        body = ConvexBody(np.array([[1.0, 1.0], [2.0, 1.0], [2.0, 2.0], [1.0, 2.0]]))
        np.testing.assert_allclose(min_norm_point(body), [1.0, 1.0], atol=1e-9)

    def test_min_norm_point_on_edge(self):
        body = ConvexBody(np.array([[-1.0, 2.0], [1.0, 2.0], [0.0, 5.0]]))
        np.testing.assert_allclose(min_norm_point(body), [0.0, 2.0], atol=1e-9)

    def test_iteration_cap(self):
        with pytest.raises(ConvergenceError):
            min_norm_point_of(np.array([[1.0, 1.0], [2.0, 1.0]]), max_iterations=0)

    def test_subset(self, unit_square):
        inner = ConvexBody(np.array([[0.25, 0.25], [0.75, 0.25], [0.5, 0.75]]))
        assert subset_of(inner, unit_square)
        assert not subset_of(unit_square, inner)


class TestStalledCorrectiveStep:

    @pytest.fixture
    def stalled_solver(self, monkeypatch):
        """Corrective step that drops the new vertex and keeps the old point."""
        def stalled(active_vertices):
            weights = np.zeros(active_vertices.shape[0])
            weights[0] = 1.0
            return weights, active_vertices[0].copy()

        monkeypatch.setattr(solver, "_corrective_step", stalled)

    def test_segment_falls_back_to_line_search(self, stalled_solver):
        point = min_norm_point_of(np.array([[1.0, 1.0], [1.0, -1.0]]), max_iterations=50)
        np.testing.assert_allclose(point, [1.0, 0.0], atol=1e-9)

    def test_edge_point_reached(self, stalled_solver):
        vertices = np.array([[-1.0, 2.0], [1.0, 2.0], [0.0, 5.0]])
        point = min_norm_point_of(vertices, max_iterations=50)
        np.testing.assert_allclose(point, [0.0, 2.0], atol=1e-9)

    def test_norm_increase_rejected(self, monkeypatch):
        def worse(active_vertices):
            weights = np.zeros(active_vertices.shape[0])
            weights[-1] = 1.0
            return weights, active_vertices[-1] + 10.0

        monkeypatch.setattr(solver, "_corrective_step", worse)
        point = min_norm_point_of(np.array([[1.0, 1.0], [1.0, -1.0]]), max_iterations=50)
        np.testing.assert_allclose(point, [1.0, 0.0], atol=1e-9)


class TestHausdorff:

    def test_nested_squares(self, unit_square):
        double = scale(unit_square, 2.0)
        assert hausdorff(unit_square, double) == pytest.approx(math.sqrt(2.0), abs=1e-9)

    def test_identical_bodies(self, triangle):
        assert hausdorff(triangle, triangle) <= 1e-9

    @pytest.mark.parametrize("dims", [1, 2, 3])
    def test_symmetric(self, rng, dims):
        for _ in range(50):
            A, B = random_body(rng, dims), random_body(rng, dims)
            assert abs(hausdorff(A, B) - hausdorff(B, A)) <= 3e-9

    @pytest.mark.parametrize("dims", [1, 2, 3])
    def test_triangle_inequality(self, rng, dims):
        for _ in range(50):
            A, B, C = (random_body(rng, dims) for _ in range(3))
            assert hausdorff(A, C) <= hausdorff(A, B) + hausdorff(B, C) + 3e-9

    def test_support_estimate_is_a_lower_bound(self, rng):
        grid = default_grid(2)
        for _ in range(200):
            A, B = random_body(rng), random_body(rng)
            assert hausdorff_support_estimate(A, B, grid) <= hausdorff(A, B) + 1e-9

    def test_support_estimate_exact_for_translates(self, triangle):
        moved = translate_by_negative(triangle, [-3.0, 0.0])
        grid = default_grid(2)
        assert hausdorff_support_estimate(triangle, moved, grid) == pytest.approx(3.0)


class TestCanonicalSelection:

    def test_tie_goes_to_lexicographic_max(self):
        square = ConvexBody.box(1.0)
        np.testing.assert_array_equal(canonical_selection(square, [1.0, 0.0]), [1.0, 1.0])

    def test_is_a_vertex_attaining_support(self, triangle):
        u = Direction.from_vector([2.0, 1.0])
        point = canonical_selection(triangle, u)
        assert float(point @ u.coords) == pytest.approx(support(triangle, u))

    def test_additive_over_minkowski_sums(self, rng):
        u = Direction.from_vector([0.3, 0.7])
        for _ in range(20):
            A, B = random_body(rng), random_body(rng)
            np.testing.assert_allclose(
                canonical_selection(minkowski_add(A, B), u),
                canonical_selection(A, u) + canonical_selection(B, u),
                atol=1e-12,
            )

    def test_additive_with_ties(self):
        square = ConvexBody.box(1.0)
        total = minkowski_add(square, square)
        np.testing.assert_array_equal(canonical_selection(total, [1.0, 0.0]), [2.0, 2.0])


class TestPrune:

    def test_drops_interior_and_edge_points(self, unit_square):
        cloud = ConvexBody(np.vstack([unit_square.vertices, [[0.5, 0.5], [0.5, 0.0]]]))
        pruned = prune_redundant(cloud)
        assert pruned.vertex_count == 4
        assert hausdorff(pruned, unit_square) <= 1e-9

    def test_collinear_points_keep_endpoints(self):
        segment = ConvexBody(np.array([[0.0, 0.0], [1.0, 1.0], [3.0, 3.0], [2.0, 2.0]]))
        pruned = prune_redundant(segment)
        assert sorted(map(tuple, pruned.vertices.tolist())) == [(0.0, 0.0), (3.0, 3.0)]

    def test_one_dimensional(self):
        line = ConvexBody(np.array([[2.0], [-1.0], [0.5]]))
        assert sorted(prune_redundant(line).vertices[:, 0].tolist()) == [-1.0, 2.0]

    def test_cube_with_center(self):
        cube = ConvexBody.box(1.0, dims=3)
        cloud = ConvexBody(np.vstack([cube.vertices, [[0.0, 0.0, 0.0]]]))
        assert prune_redundant(cloud).vertex_count == 8

    def test_duplicates_collapse(self):
        body = ConvexBody(np.array([[1.0, 2.0], [1.0, 2.0]]))
        assert prune_redundant(body).vertex_count == 1

    def test_minkowski_sum_support_preserved(self, rng):
        grid = default_grid(2)
        A, B = random_body(rng, max_vertices=8), random_body(rng, max_vertices=8)
        total = minkowski_add(A, B)
        np.testing.assert_allclose(
            support_profile(prune_redundant(total), grid.matrix),
            support_profile(total, grid.matrix),
            atol=1e-12,
        )
