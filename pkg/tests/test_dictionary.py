"""Bars to configurations, sub-level refinement, mirror, length spectra."""

import math
from collections import Counter

import pytest

from levelbars import bars as barmod
from levelbars.bars import CLOSED, CLOSED_OPEN, OPEN, OPEN_CLOSED, Bar
from levelbars.dictionary import (
    ConfigurationMap,
    configurations,
    length_spectrum,
    mirror,
    mirror_bar,
    refine_to_sublevel,
)
from levelbars.levelset import LevelBarcodes
from levelbars.sublevel import sublevel_barcodes


def bar(degree, l, r, lc, rc):
    return Bar(degree, l, r, left_closed=lc, right_closed=rc)


def barcode(*entries):
    by_degree = {}
    for b in entries:
        by_degree.setdefault(b.degree, Counter())[b] += 1
    return LevelBarcodes(by_degree)


class TestConfigurations:
    def test_circle_delta(self, named_cases):
        circ = next(c for c in named_cases if c.name == "circle")
        conf = configurations(circ.level)
        assert conf["delta"][0].points == Counter({(0.0, 2.0): 1})
        assert conf["delta"][1].points == Counter({(2.0, 0.0): 1})
        assert conf["gamma"] == {}

    def test_valley_gamma(self, named_cases):
        valley = next(c for c in named_cases if c.name == "valley")
        conf = configurations(valley.level)
        assert conf["delta"][0].points == Counter({(0.0, 1.0): 1})
        assert conf["gamma"][0].points == Counter({(1.0, 0.0): 1})

    def test_empty_barcode(self):
        conf = configurations(barcode())
        assert conf == {"delta": {}, "gamma": {}}

    def test_delta_sides_of_diagonal(self):
        conf = configurations(barcode(bar(0, 1.0, 1.0, True, True),
                                      bar(0, 0.0, 2.0, True, True),
                                      bar(1, 3.0, 5.0, False, False)))
        delta = conf["delta"]
        assert delta[0].diagonal_mass() == 1
        assert delta[0].above_diagonal() == Counter({(1.0, 1.0): 1, (0.0, 2.0): 1})
        assert delta[2].below_diagonal() == Counter({(5.0, 3.0): 1})

    def test_gamma_rejects_diagonal(self):
        with pytest.raises(ValueError, match="diagonal"):
            ConfigurationMap("gamma", 0, Counter({(1.0, 1.0): 1}))

    def test_mass_identities(self, corpus):
        for case in corpus[:30]:
            lv = case.level
            conf = configurations(lv)
            degrees = set(conf["delta"]) | set(conf["gamma"]) | set(lv.degrees())
            for r in degrees:
                delta = conf["delta"].get(r)
                gamma = conf["gamma"].get(r)
                delta_mass = delta.total_mass() if delta else 0
                gamma_mass = gamma.total_mass() if gamma else 0
                assert delta_mass == (barmod.total(lv.closed_bars(r))
                                      + barmod.total(lv.open_bars(r - 1))), case.name
                assert gamma_mass == (barmod.total(lv.closed_open_bars(r))
                                      + barmod.total(lv.open_closed_bars(r))), case.name

    def test_closed_side_placement(self, corpus):
        for case in corpus[:30]:
            for r, conf in configurations(case.level)["delta"].items():
                closed_mass = barmod.total(case.level.closed_bars(r))
                assert sum(conf.above_diagonal().values()) == closed_mass


class TestRefinement:
    def test_circle(self, named_cases):
        circ = next(c for c in named_cases if c.name == "circle")
        assert refine_to_sublevel(circ.level) == circ.sub

    def test_all_named_cases(self, named_cases):
        for case in named_cases:
            assert refine_to_sublevel(case.level) == case.sub, case.name

    def test_invisible_channel_collects_open_closed(self, named_cases):
        valley = next(c for c in named_cases if c.name == "valley")
        refined = refine_to_sublevel(valley.level)
        assert refined.invisible == {0: Counter({bar(0, 0.0, 1.0, False, True): 1})}

    def test_degenerate_closed_bar_still_refines(self):
        refined = refine_to_sublevel(barcode(bar(0, 2.0, 2.0, True, True)))
        assert refined.infinite == {0: Counter({bar(0, 2.0, math.inf, False, False): 1})}

    def test_open_bar_shifts_degree(self):
        refined = refine_to_sublevel(barcode(bar(1, 0.0, 4.0, False, False)))
        assert refined.infinite == {2: Counter({bar(2, 4.0, math.inf, False, False): 1})}


class TestMirror:
    def test_kinds_swap(self):
        assert mirror_bar(bar(0, 1.0, 3.0, True, False)) == bar(0, -3.0, -1.0, False, True)
        assert mirror_bar(bar(2, 1.0, 3.0, False, False)) == bar(2, -3.0, -1.0, False, False)

    def test_valley_peak_duality(self, named_cases):
        valley = next(c for c in named_cases if c.name == "valley")
        peak = next(c for c in named_cases if c.name == "peak")
        # peak vertex values are exactly the negated valley values
        assert mirror(valley.level).by_degree == {
            0: Counter({bar(0, -1.0, 0.0, True, True): 1,
                        bar(0, -1.0, 0.0, True, False): 1})}
        got = mirror(valley.level).by_degree
        from levelbars.algebra import PrimeField
        from levelbars.levelset import level_barcodes
        assert got == level_barcodes(peak.space, PrimeField(2)).by_degree

    def test_involution(self, corpus):
        for case in corpus[:20]:
            lv = case.level
            assert mirror(mirror(lv)).by_degree == lv.by_degree, case.name

    def test_empty(self):
        assert mirror(barcode()).by_degree == {}


class TestLengthSpectrum:
    def test_circle_groups(self, named_cases):
        circ = next(c for c in named_cases if c.name == "circle")
        spec = length_spectrum(circ.level)
        assert spec.group(0, CLOSED) == Counter({2.0: 1})
        assert spec.group(0, OPEN) == Counter({2.0: 1})
        assert spec.group(0, CLOSED_OPEN) == Counter()

    def test_translation_invariance(self, named_cases):
        from levelbars.levelset import level_barcodes
        for case in named_cases:
            moved = level_barcodes(case.space.shifted(11.75), case.field)
            assert (length_spectrum(moved).by_group
                    == length_spectrum(case.level).by_group), case.name

    def test_multiplicity_accumulates(self):
        spec = length_spectrum(barcode(bar(0, 0.0, 1.0, True, False),
                                       bar(0, 5.0, 6.0, True, False)))
        assert spec.group(0, CLOSED_OPEN) == Counter({1.0: 2})
        assert spec.group(1, OPEN_CLOSED) == Counter()
