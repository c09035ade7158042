"""The dense ground-truth engine and the seeded input generators."""

import json

import numpy as np
import pytest

from levelbars import fixtures, oracle
from levelbars.oracle import (
    RandomSpaceSpec,
    betti,
    dense_nullspace,
    dense_rank,
    random_chain_complex,
    random_space,
    random_space_document,
    zigzag_profile,
)


OCTAHEDRON = [[0, 1, 4], [1, 2, 4], [2, 3, 4], [0, 3, 4],
              [0, 1, 5], [1, 2, 5], [2, 3, 5], [0, 3, 5]]


def close_faces(top_cells):
    from itertools import combinations
    out = set()
    for cell in top_cells:
        for k in range(1, len(cell) + 1):
            out.update(combinations(tuple(sorted(cell)), k))
    return sorted(out, key=lambda s: (len(s), s))


class TestDense:
    def test_rank_known_matrices(self):
        assert dense_rank([[1, 1], [1, 1]], 2) == 1
        assert dense_rank([[1, 2], [2, 1]], 3) == 1
        assert dense_rank([[1, 2], [2, 1]], 5) == 2
        assert dense_rank(np.zeros((3, 4)), 2) == 0

    def test_rank_of_empty(self):
        assert dense_rank(np.zeros((0, 5)), 3) == 0

    def test_nullspace_annihilates(self):
        rng = np.random.default_rng(3)
        for p in (2, 3, 5):
            for _ in range(20):
                mat = rng.integers(0, p, size=(4, 6))
                basis = dense_nullspace(mat, p)
                assert basis.shape[1] == 6 - dense_rank(mat, p)
                assert not ((mat @ basis) % p).any()

    def test_nullspace_of_zero_rows_is_identity(self):
        basis = dense_nullspace(np.zeros((0, 3), dtype=np.int64), 2)
        assert basis.shape == (3, 3)


class TestBetti:
    def test_octahedron_is_a_sphere(self):
        assert betti(close_faces(OCTAHEDRON), 2) == [1, 0, 1]
        assert betti(close_faces(OCTAHEDRON), 5) == [1, 0, 1]

    def test_circle_fixture(self):
        assert betti(fixtures.circle().simplices, 2) == [1, 1]

    def test_segment_fixture(self):
        assert betti(fixtures.segment().simplices, 3) == [1, 0]

    def test_empty(self):
        assert betti([], 2) == []

    def test_two_points(self):
        assert betti([(0,), (5,)], 2) == [2]

    def test_rejects_missing_faces(self):
        with pytest.raises(ValueError, match="missing"):
            betti([(0, 1)], 2)


class TestZigzagProfile:
    def test_segment(self):
        dims, ranks = zigzag_profile(fixtures.segment(), 2, 0)
        assert dims == [1, 1, 1]
        assert ranks == [1, 1]

    def test_circle_degree_zero(self):
        dims, ranks = zigzag_profile(fixtures.circle(), 2, 0)
        assert dims == [1, 2, 2, 2, 1]
        assert ranks == [1, 2, 2, 1]

    def test_degree_above_top_is_flat_zero(self):
        dims, ranks = zigzag_profile(fixtures.circle(), 2, 3)
        assert dims == [0, 0, 0, 0, 0]
        assert ranks == [0, 0, 0, 0]

    def test_doubled_sampling_adds_isomorphisms(self):
        dims1, _ = zigzag_profile(fixtures.circle(), 2, 0, samples_per_gap=1)
        dims2, _ = zigzag_profile(fixtures.circle(), 2, 0, samples_per_gap=2)
        assert len(dims2) == len(dims1) + 4
        assert set(dims2) == set(dims1)


class TestRandomSpaces:
    def test_documents_are_deterministic(self):
        a = random_space_document(RandomSpaceSpec(seed=7))
        b = random_space_document(RandomSpaceSpec(seed=7))
        assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)

    def test_seeds_differ(self):
        docs = {json.dumps(random_space_document(RandomSpaceSpec(seed=s)),
                           sort_keys=True) for s in range(25)}
        assert len(docs) > 20

    def test_sweep_loads_and_respects_caps(self):
        for seed in range(300):
            spec = RandomSpaceSpec(seed=seed)
            space = random_space(spec)
            assert 0 < len(space.vertex_ids) <= spec.max_vertices
            assert space.dimension <= spec.top_dim
            assert betti(space.simplices, 2)[0] >= 1

    def test_vertex_cap_honored_at_twelve(self):
        for seed in range(40):
            space = random_space(RandomSpaceSpec(seed=seed, max_vertices=12))
            assert len(space.vertex_ids) <= 12


class TestRandomChainComplexes:
    def test_always_valid(self):
        from levelbars.morse import validate
        for seed in range(60):
            for p in (2, 3, 5):
                assert validate(random_chain_complex(seed, p)).ok, (seed, p)

    def test_deterministic(self):
        a = random_chain_complex(9, 3)
        b = random_chain_complex(9, 3)
        assert a.generators == b.generators
        assert {r: m.to_dense() for r, m in a.boundaries.items()} \
            == {r: m.to_dense() for r, m in b.boundaries.items()}
