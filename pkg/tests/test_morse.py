"""Chain complexes with values: validation, Hodge splitting, reconstruction."""

from collections import Counter

import pytest

from levelbars import fixtures, morse, oracle, verify
from levelbars.algebra import PrimeField, rank
from levelbars.bars import Bar
from levelbars.levelset import LevelBarcodes, level_barcodes
from levelbars.morse import (
    ChainComplex,
    Counts,
    compare,
    counts_at,
    counts_from_barcodes,
    hodge,
    load_chain_complex,
    reconstruct,
    validate,
)
from levelbars.plcomplex import ValidationError

F2 = PrimeField(2)
F3 = PrimeField(3)


def bar(degree, l, r, lc, rc):
    return Bar(degree, l, r, left_closed=lc, right_closed=rc)


def barcode(*entries):
    by_degree = {}
    for b in entries:
        by_degree.setdefault(b.degree, Counter())[b] += 1
    return LevelBarcodes(by_degree)


class TestLoadValidate:
    def test_sphere_chain_is_valid(self):
        chain = fixtures.sphere_chain()
        assert validate(chain).ok
        assert chain.dim(2) == 2 and chain.top_degree() == 2

    def test_circle_chain_is_valid(self):
        assert validate(fixtures.circle_chain()).ok

    def test_empty_complex_is_valid(self):
        chain = ChainComplex(F2, {}, {})
        assert validate(chain).ok
        assert hodge(chain).c == {0: 0}

    def test_square_violation_reported(self):
        doc = {"generators": [{"name": "a", "degree": 0, "value": 0.0},
                              {"name": "b", "degree": 1, "value": 1.0},
                              {"name": "c", "degree": 2, "value": 2.0}],
               "boundaries": {"1": [[0, 0, 1]], "2": [[0, 0, 1]]}}
        chain = load_chain_complex(doc, F2)
        report = validate(chain)
        assert not report.ok
        assert any("nonzero" in v for v in report.violations)

    def test_value_increase_reported_with_names(self):
        doc = {"generators": [{"name": "low", "degree": 0, "value": 5.0},
                              {"name": "high", "degree": 1, "value": 1.0}],
               "boundaries": {"1": [[0, 0, 1]]}}
        report = validate(load_chain_complex(doc, F2))
        assert not report.ok
        assert "high" in report.violations[0] and "low" in report.violations[0]

    def test_loader_rejects_bad_degree_key(self):
        doc = {"generators": [{"name": "a", "degree": 0, "value": 0.0}],
               "boundaries": {"x": []}}
        with pytest.raises(ValidationError):
            load_chain_complex(doc, F2)

    def test_loader_rejects_duplicate_names(self):
        doc = {"generators": [{"name": "a", "degree": 0, "value": 0.0},
                              {"name": "a", "degree": 0, "value": 1.0}],
               "boundaries": {}}
        with pytest.raises(ValidationError):
            load_chain_complex(doc, F2)

    def test_loader_rejects_entry_out_of_range(self):
        doc = {"generators": [{"name": "a", "degree": 0, "value": 0.0},
                              {"name": "b", "degree": 1, "value": 1.0}],
               "boundaries": {"1": [[4, 0, 1]]}}
        with pytest.raises(ValidationError):
            load_chain_complex(doc, F2)


class TestHodge:
    def test_sphere(self):
        summary = hodge(fixtures.sphere_chain())
        assert summary.c == {0: 1, 1: 1, 2: 2}
        assert summary.beta == {0: 1, 1: 0, 2: 1}
        assert summary.rho == {0: 0, 1: 1, 2: 0}

    def test_circle_chain(self):
        summary = hodge(fixtures.circle_chain())
        assert summary.c == {0: 1, 1: 1}
        assert summary.beta == {0: 1, 1: 1}
        assert summary.rho == {0: 0, 1: 0}

    def test_peak_chain(self):
        summary = hodge(fixtures.peak_chain())
        assert summary.beta == {0: 1, 1: 0}
        assert summary.rho == {0: 1, 1: 0}

    def test_invalid_complex_refused(self):
        doc = {"generators": [{"name": "a", "degree": 0, "value": 5.0},
                              {"name": "b", "degree": 1, "value": 1.0}],
               "boundaries": {"1": [[0, 0, 1]]}}
        with pytest.raises(ValueError):
            hodge(load_chain_complex(doc, F2))

    def test_random_complexes_satisfy_identity(self):
        for seed in range(30):
            p = verify.FIELD_CYCLE[seed % 3]
            chain = oracle.random_chain_complex(seed, p)
            assert validate(chain).ok, seed
            summary = hodge(chain)
            for r in summary.degrees():
                assert (summary.c[r] == summary.beta[r] + summary.rho[r]
                        + summary.rho.get(r - 1, 0)), (seed, r)


class TestCounts:
    def test_circle(self, named_cases):
        circ = next(c for c in named_cases if c.name == "circle")
        got = counts_from_barcodes(circ.level)
        assert got == {0: Counts(beta=1, rho=0, c=1),
                       1: Counts(beta=1, rho=0, c=1)}

    def test_peak(self, named_cases):
        peak = next(c for c in named_cases if c.name == "peak")
        got = counts_from_barcodes(peak.level)
        assert got == {0: Counts(beta=1, rho=1, c=2),
                       1: Counts(beta=0, rho=0, c=1)}

    def test_empty(self):
        assert counts_from_barcodes(barcode()) == {0: Counts(0, 0, 0)}

    def test_circle_thresholds(self, named_cases):
        circ = next(c for c in named_cases if c.name == "circle")
        at1 = counts_at(circ.level, 1.0)
        assert at1[0].beta == 1 and at1[1].beta == 0
        at2 = counts_at(circ.level, 2.0)
        assert at2[1].beta == 1

    def test_peak_thresholds(self, named_cases):
        peak = next(c for c in named_cases if c.name == "peak")
        before = counts_at(peak.level, -1.0)
        assert before[0] == Counts(beta=2, rho=0, c=2)
        after = counts_at(peak.level, 0.0)
        assert after[0] == Counts(beta=1, rho=1, c=2)
        assert after[1] == Counts(beta=0, rho=0, c=1)

    def test_below_everything(self, named_cases):
        peak = next(c for c in named_cases if c.name == "peak")
        assert all(c == Counts(0, 0, 0)
                   for c in counts_at(peak.level, -5.0).values())


class TestReconstruction:
    def test_peak_stages(self, named_cases):
        peak = next(c for c in named_cases if c.name == "peak")
        rebuilt = reconstruct(peak.level, PrimeField(3))
        assert rebuilt.thresholds == [-1.0, 0.0]
        first, second = rebuilt.stages
        assert first.dim(0) == 2 and first.dim(1) == 0
        assert second.dim(0) == 2 and second.dim(1) == 1
        assert second.homology == {0: 1}
        assert second.plus == {0: 1} and second.minus == {1: 1}

    def test_circle_is_its_own_morse_complex(self, named_cases):
        circ = next(c for c in named_cases if c.name == "circle")
        rebuilt = reconstruct(circ.level)
        last = rebuilt.stage_at(2.0)
        assert last.dim(0) == 1 and last.dim(1) == 1
        assert rebuilt.boundary_matrix(2.0, 1).is_zero()

    def test_boundary_squares_to_zero(self, corpus):
        from levelbars.algebra import compose
        for case in corpus[:15]:
            rebuilt = reconstruct(case.level, case.field)
            for t in rebuilt.thresholds:
                top = max(rebuilt.stage_at(t).degrees(), default=0)
                for r in range(top + 1):
                    square = compose(rebuilt.boundary_matrix(t, r),
                                     rebuilt.boundary_matrix(t, r + 1))
                    assert square.is_zero(), (case.name, t, r)

    def test_homology_matches_counts(self, corpus):
        for case in corpus[:15]:
            rebuilt = reconstruct(case.level, case.field)
            for t in rebuilt.thresholds:
                expected = counts_at(case.level, t)
                for r, want in expected.items():
                    assert rebuilt.homology_dim(t, r) == want.beta, (case.name, t, r)

    def test_inclusions_intertwine_boundaries(self, corpus):
        from levelbars.algebra import compose
        for case in corpus[:10]:
            rebuilt = reconstruct(case.level, case.field)
            ts = rebuilt.thresholds
            for t, t_next in zip(ts, ts[1:]):
                top = max(rebuilt.stage_at(t_next).degrees(), default=0)
                for r in range(1, top + 2):
                    left = compose(rebuilt.inclusion(t, t_next, r - 1),
                                   rebuilt.boundary_matrix(t, r))
                    right = compose(rebuilt.boundary_matrix(t_next, r),
                                    rebuilt.inclusion(t, t_next, r))
                    assert left.to_dense() == right.to_dense(), (case.name, t, r)

    def test_open_closed_bars_ignored(self):
        rebuilt = reconstruct(barcode(bar(0, 0.0, 1.0, False, True)))
        assert rebuilt.thresholds == []
        assert rebuilt.stage_at(5.0).generators == {}


class TestCompare:
    def test_circle_chain_matches_circle_barcode(self, named_cases):
        circ = next(c for c in named_cases if c.name == "circle")
        report = compare(fixtures.circle_chain(), reconstruct(circ.level))
        assert report.ok

    def test_peak_chain_matches_peak_barcode(self, named_cases):
        peak = next(c for c in named_cases if c.name == "peak")
        report = compare(fixtures.peak_chain(),
                         reconstruct(peak.level, PrimeField(3)))
        assert report.ok

    def test_mismatch_is_reported(self, named_cases):
        peak = next(c for c in named_cases if c.name == "peak")
        report = compare(fixtures.circle_chain(), reconstruct(peak.level))
        assert not report.ok
        assert "mismatch" in report.violations[0]

    def test_sphere_counts_match_sphere_barcode_analog(self):
        # The bar set a sphere-shaped filtration produces: one component for
        # good, a 1-cycle killed by the first cap, the second cap's 2-cycle.
        bars = barcode(bar(0, 0.0, 3.0, True, True),
                       bar(1, 1.0, 2.0, True, False),
                       bar(2, 3.0, 3.0, True, True))
        counts = counts_from_barcodes(bars)
        summary = hodge(fixtures.sphere_chain())
        assert {r: c.beta for r, c in counts.items()} == summary.beta
        assert {r: c.rho for r, c in counts.items()} == summary.rho
        assert {r: c.c for r, c in counts.items()} == summary.c
