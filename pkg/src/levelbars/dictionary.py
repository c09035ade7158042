"""Translation layer between the four level bar types and other invariants.

Bars become planar point configurations (delta from closed and open bars,
gamma from the half-open kinds), sub-level barcodes (the refinement), their
mirror images under negating the map, and length spectra.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field as dc_field

from levelbars.bars import (CLOSED, CLOSED_OPEN, OPEN, OPEN_CLOSED, Bar,
                            prune_degrees)
from levelbars.levelset import LevelBarcodes
from levelbars.sublevel import SublevelBarcodes


@dataclass(frozen=True)
class ConfigurationMap:
    """Finite multiset of plane points (x, y), read as x + iy."""

    tag: str  # "delta" | "gamma"
    degree: int
    points: Counter = dc_field(default_factory=Counter)

    def __post_init__(self) -> None:
        if self.tag not in ("delta", "gamma"):
            raise ValueError(f"unknown configuration tag {self.tag!r}")
        for (x, y), mult in self.points.items():
            if mult <= 0:
                raise ValueError("configuration multiplicities must be positive")
            if self.tag == "gamma" and x == y:
                raise ValueError(f"gamma configuration touches the diagonal at {x}")

    def total_mass(self) -> int:
        return sum(self.points.values())

    def diagonal_mass(self) -> int:
        return sum(m for (x, y), m in self.points.items() if x == y)

    def above_diagonal(self) -> Counter:
        """Points with x <= y (closed-bar side), diagonal included."""
        return Counter({p: m for p, m in self.points.items() if p[0] <= p[1]})

    def below_diagonal(self) -> Counter:
        return Counter({p: m for p, m in self.points.items() if p[0] > p[1]})


def configurations(bars: LevelBarcodes) -> dict[str, dict[int, ConfigurationMap]]:
    """Delta and gamma point configurations, one map per degree.

    delta_r collects (a, b) from closed r-bars and (beta, alpha) from open
    (r-1)-bars; gamma_r collects (m, n) from closed-open r-bars and (n', m')
    from open-closed r-bars.  Half-open bars have distinct endpoints, so
    gamma never meets the diagonal; degenerate closed bars land on it.
    """
    delta_points: dict[int, Counter] = {}
    gamma_points: dict[int, Counter] = {}
    for bar, mult in bars.all_bars():
        if bar.kind == CLOSED:
            delta_points.setdefault(bar.degree, Counter())[(bar.left, bar.right)] += mult
        elif bar.kind == OPEN:
            delta_points.setdefault(bar.degree + 1, Counter())[(bar.right, bar.left)] += mult
        elif bar.kind == CLOSED_OPEN:
            gamma_points.setdefault(bar.degree, Counter())[(bar.left, bar.right)] += mult
        else:
            gamma_points.setdefault(bar.degree, Counter())[(bar.right, bar.left)] += mult
    return {
        "delta": {r: ConfigurationMap("delta", r, pts)
                  for r, pts in sorted(delta_points.items())},
        "gamma": {r: ConfigurationMap("gamma", r, pts)
                  for r, pts in sorted(gamma_points.items())},
    }


def refine_to_sublevel(bars: LevelBarcodes) -> SublevelBarcodes:
    """Predict the sub-level barcodes from the level barcodes.

    Closed r-bars [a, b] refine to infinite r-bars (a, inf); open r-bars
    (alpha, beta) to infinite (r+1)-bars (beta, inf); closed-open r-bars
    [m, n) to finite r-bars (m, n).  Open-closed bars have no sub-level
    shadow; they are parked in the ``invisible`` channel so the duality
    check can recover them from the negated map.
    """
    infinite: dict[int, Counter] = {}
    finite: dict[int, Counter] = {}
    invisible: dict[int, Counter] = {}
    for bar, mult in bars.all_bars():
        if bar.kind == CLOSED:
            target = Bar(bar.degree, bar.left, math.inf, False, False)
            infinite.setdefault(bar.degree, Counter())[target] += mult
        elif bar.kind == OPEN:
            target = Bar(bar.degree + 1, bar.right, math.inf, False, False)
            infinite.setdefault(bar.degree + 1, Counter())[target] += mult
        elif bar.kind == CLOSED_OPEN:
            target = Bar(bar.degree, bar.left, bar.right, False, False)
            finite.setdefault(bar.degree, Counter())[target] += mult
        else:
            invisible.setdefault(bar.degree, Counter())[bar] += mult
    return SublevelBarcodes(infinite=infinite, finite=finite,
                            invisible=prune_degrees(invisible))


def mirror_bar(bar: Bar) -> Bar:
    """The bar's image under negating the map: endpoints swap, negate, and
    carry their closedness with them."""
    return Bar(bar.degree, -bar.right, -bar.left,
               left_closed=bar.right_closed, right_closed=bar.left_closed)


def mirror(bars: LevelBarcodes) -> LevelBarcodes:
    """Level barcodes of -f predicted from those of f (degrees unchanged)."""
    by_degree: dict[int, Counter] = {}
    for bar, mult in bars.all_bars():
        by_degree.setdefault(bar.degree, Counter())[mirror_bar(bar)] += mult
    return LevelBarcodes(by_degree)


@dataclass(frozen=True)
class LengthSpectrum:
    """Bar lengths with multiplicities, grouped by (degree, bar kind)."""

    by_group: dict[tuple[int, str], Counter]

    def group(self, degree: int, kind: str) -> Counter:
        return Counter(self.by_group.get((degree, kind), Counter()))


def length_spectrum(bars: LevelBarcodes) -> LengthSpectrum:
    """Project bars to their lengths; translation-invariant by construction."""
    by_group: dict[tuple[int, str], Counter] = {}
    for bar, mult in bars.all_bars():
        key = (bar.degree, bar.kind)
        by_group.setdefault(key, Counter())[bar.length] += mult
    return LengthSpectrum(by_group)
