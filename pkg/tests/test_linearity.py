"""Tests for additivity and positive homogeneity of the integral."""

import pytest

from fuzzypettis.exceptions import FuzzyPettisError
from fuzzypettis.integration import scalar_linearity_check
from fuzzypettis.measure import random_mapping


@pytest.fixture
def companion(rng, two_atom_mapping):
    return random_mapping(
        rng, 2, max_levels=2, max_vertices=4, zero_weight_prob=0.0,
        space=two_atom_mapping.space
    )


class TestScalarLinearity:

    @pytest.mark.parametrize("scalar", [0.0, 1.0, 2.5])
    def test_identities_hold(self, two_atom_mapping, companion, scalar):
        full = two_atom_mapping.space.full_set()
        result = scalar_linearity_check(two_atom_mapping, companion, scalar, full, prune=True)
        assert result.passed()
        assert result.scalar == scalar

    def test_zero_scalar_is_exact(self, two_atom_mapping, companion):
        full = two_atom_mapping.space.full_set()
        result = scalar_linearity_check(two_atom_mapping, companion, 0.0, full)
        assert result.zero_exact
        assert result.homogeneity <= 1e-12

    def test_negative_scalar(self, two_atom_mapping, companion):
        with pytest.raises(FuzzyPettisError):
            scalar_linearity_check(
                two_atom_mapping, companion, -1.0, two_atom_mapping.space.full_set()
            )

    def test_incompatible_mappings(self, two_atom_mapping, point_mapping):
        with pytest.raises(FuzzyPettisError):
            scalar_linearity_check(
                two_atom_mapping, point_mapping, 1.0, two_atom_mapping.space.full_set()
            )

    def test_random_pairs_on_subsets(self, rng):
        for _ in range(5):
            F = random_mapping(rng, 2, max_atoms=3, max_vertices=4)
            G = random_mapping(rng, 2, max_vertices=4, space=F.space)
            A = F.space.subset(F.space.atoms[:1])
            assert scalar_linearity_check(F, G, 1.5, A, prune=True).passed()
