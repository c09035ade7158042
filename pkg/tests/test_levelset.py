"""Level persistence via the levelset zigzag."""

import math
from collections import Counter

import pytest

from levelbars import fixtures, oracle
from levelbars.algebra import PrimeField, StructuralError, rank
from levelbars.bars import Bar
from levelbars.levelset import (
    IntervalSummand,
    build_zigzag,
    decompose,
    level_barcodes,
    zigzag_layout,
)

F2 = PrimeField(2)
F3 = PrimeField(3)


def bar(degree, l, r, lc, rc):
    return Bar(degree, l, r, left_closed=lc, right_closed=rc)


class TestLayout:
    def test_circle_node_pattern(self):
        _, nodes = zigzag_layout(fixtures.circle())
        assert [n.kind for n in nodes] == ["interlevel", "level", "interlevel",
                                           "level", "interlevel"]
        assert [n.critical for n in nodes] == [0.0, None, 1.0, None, 2.0]
        # Level nodes sit at the sampled regular values.
        assert [n.lo for n in nodes if n.kind == "level"] == [0.5, 1.5]

    def test_virtual_bounds_pad_the_ends(self):
        _, nodes = zigzag_layout(fixtures.segment())
        assert nodes[0].lo == -1.0
        assert nodes[-1].hi == 2.0

    def test_single_level_space(self):
        doc = {"vertices": [{"id": 0, "value": 1.0}], "simplices": [[0]]}
        from levelbars.plcomplex import load
        _, nodes = zigzag_layout(load(doc))
        assert len(nodes) == 1
        assert nodes[0].kind == "interlevel" and nodes[0].critical == 1.0

    def test_endpoint_labels_in_gap(self):
        _, nodes = zigzag_layout(fixtures.segment())
        level = nodes[1]
        assert level.birth == (0.0, False)
        assert level.death == (1.0, False)

    def test_interlevel_label_is_closed_at_critical(self):
        _, nodes = zigzag_layout(fixtures.segment())
        assert nodes[0].birth == (0.0, True)
        assert nodes[2].death == (1.0, True)

    def test_sampling_must_be_positive(self):
        with pytest.raises(StructuralError):
            zigzag_layout(fixtures.segment(), samples_per_gap=0)


class TestModules:
    def test_segment_degree_zero(self):
        z = build_zigzag(fixtures.segment(), F2, 0)
        assert z.dims == [1, 1, 1]
        assert [rank(a.matrix) for a in z.arrows] == [1, 1]

    def test_circle_degree_zero(self):
        z = build_zigzag(fixtures.circle(), F2, 0)
        assert z.dims == [1, 2, 2, 2, 1]
        for arrow in z.arrows:
            assert rank(arrow.matrix) == z.dims[arrow.target]

    def test_circle_degree_one(self):
        # Level sets of a circle are points, so nothing lives in degree one;
        # the essential loop shows up as the degree-zero open bar instead.
        z = build_zigzag(fixtures.circle(), F2, 1)
        assert z.dims == [0, 0, 0, 0, 0]

    def test_arrows_leave_level_nodes(self):
        z = build_zigzag(fixtures.circle(), F2, 0)
        for arrow in z.arrows:
            assert z.nodes[arrow.source].kind == "level"
            assert z.nodes[arrow.target].kind == "interlevel"

    def test_dims_match_oracle_profile(self, small_corpus):
        for case in small_corpus:
            top = case.space.dimension
            for degree in range(top + 1):
                z = build_zigzag(case.space, case.field, degree)
                dims, ranks = oracle.zigzag_profile(case.space,
                                                    case.characteristic, degree)
                assert z.dims == dims, (case.name, degree)
                assert [rank(a.matrix) for a in z.arrows] == ranks, (case.name, degree)


class TestDecompose:
    def test_circle_intervals(self):
        z = build_zigzag(fixtures.circle(), F2, 0)
        got = {(s.first, s.last): s.multiplicity for s in decompose(z)}
        assert got == {(0, 4): 1, (1, 3): 1}

    def test_segment_single_interval(self):
        z = build_zigzag(fixtures.segment(), F2, 0)
        assert decompose(z) == [IntervalSummand(0, 2, 1)]

    def test_multiplicities_cover_every_node(self, small_corpus):
        for case in small_corpus:
            for degree in range(case.space.dimension + 1):
                z = build_zigzag(case.space, case.field, degree)
                summands = decompose(z)
                for k, dim in enumerate(z.dims):
                    covering = sum(s.multiplicity for s in summands
                                   if s.first <= k <= s.last)
                    assert covering == dim, (case.name, degree, k)

    def test_multiplicities_cover_every_arrow(self, small_corpus):
        for case in small_corpus:
            for degree in range(case.space.dimension + 1):
                z = build_zigzag(case.space, case.field, degree)
                summands = decompose(z)
                for arrow in z.arrows:
                    lo, hi = sorted((arrow.source, arrow.target))
                    spanning = sum(s.multiplicity for s in summands
                                   if s.first <= lo and hi <= s.last)
                    assert spanning == rank(arrow.matrix), (case.name, degree)


class TestBarcodes:
    def test_segment(self):
        got = level_barcodes(fixtures.segment(), F2)
        assert got.by_degree == {0: Counter({bar(0, 0.0, 1.0, True, True): 1})}

    def test_valley(self):
        got = level_barcodes(fixtures.valley(), F2)
        assert got.by_degree == {0: Counter({bar(0, 0.0, 1.0, True, True): 1,
                                             bar(0, 0.0, 1.0, False, True): 1})}

    def test_single_vertex_gives_degenerate_bar(self):
        from levelbars.plcomplex import load
        space = load({"vertices": [{"id": 0, "value": 3.0}], "simplices": [[0]]})
        got = level_barcodes(space, F2)
        assert got.by_degree == {0: Counter({bar(0, 3.0, 3.0, True, True): 1})}
        assert got.degenerate_closed_bars(0) == Counter(
            {bar(0, 3.0, 3.0, True, True): 1})

    def test_peak(self):
        got = level_barcodes(fixtures.peak(), F3)
        assert got.by_degree == {0: Counter({bar(0, -1.0, 0.0, True, True): 1,
                                             bar(0, -1.0, 0.0, True, False): 1})}

    def test_circle(self):
        got = level_barcodes(fixtures.circle(), F2)
        assert got.by_degree == {0: Counter({bar(0, 0.0, 2.0, True, True): 1,
                                             bar(0, 0.0, 2.0, False, False): 1})}

    def test_selectors_partition_bars(self):
        got = level_barcodes(fixtures.peak(), F3)
        assert got.closed_bars(0) == Counter({bar(0, -1.0, 0.0, True, True): 1})
        assert got.closed_open_bars(0) == Counter({bar(0, -1.0, 0.0, True, False): 1})
        assert got.open_bars(0) == Counter()
        assert got.open_closed_bars(0) == Counter()

    def test_doubled_sampling_invariant(self):
        for space, p in [(fixtures.circle(), 2), (fixtures.peak(), 3),
                         (fixtures.valley(), 2)]:
            f = PrimeField(p)
            assert (level_barcodes(space, f).by_degree
                    == level_barcodes(space, f, samples_per_gap=2).by_degree)

    def test_all_bars_iterates_with_multiplicity(self):
        got = level_barcodes(fixtures.valley(), F2)
        listed = list(got.all_bars())
        assert sum(m for _, m in listed) == 2
