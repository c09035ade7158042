"""Angle-valued maps via a truncated infinite cyclic cover.

An angle-valued map is a vertex angle in [0, 2pi) plus an integer winding per
edge; the lifted edge difference is theta(v) - theta(u) + 2pi*w(u, v).  The
cover stacks ``periods`` copies of the vertex set with values theta + 2pi*k
and lifts each simplex by the winding offsets.  Level barcodes of the cover,
restricted to an inner window that discards one period at each end, fall into
2pi-translation orbits; one representative per orbit is the quotient barcode.
Families spanning the whole inner window are periodic (shift-invariant) and
are counted separately rather than listed as bars.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field as dc_field
from typing import Mapping, Sequence

from levelbars.algebra import PrimeField
from levelbars.bars import CLOSED, OPEN, Bar, prune_degrees
from levelbars.levelset import level_barcodes
from levelbars.plcomplex import (DEFAULT_MAX_DIM, PLSpace, Simplex,
                                 ValidationError)

TWO_PI = 2.0 * math.pi


class StabilizationError(RuntimeError):
    """Raised when translation orbits disagree between periods of the cover,
    meaning the chosen window was too short to separate truncation artifacts
    from genuine periodic structure."""


@dataclass(frozen=True)
class AngleSpace:
    """Finite simplicial complex with vertex angles and edge windings."""

    angles: Mapping[int, float]
    simplices: tuple[Simplex, ...]
    windings: Mapping[tuple[int, int], int]

    @classmethod
    def build(cls, angles: Mapping[int, float],
              simplices: Sequence[Sequence[int]],
              windings: Mapping[tuple[int, int], int] | None = None,
              max_dim: int = DEFAULT_MAX_DIM) -> "AngleSpace":
        for vertex, theta in angles.items():
            if not math.isfinite(theta) or not 0.0 <= theta < TWO_PI:
                raise ValidationError(
                    f"vertex {vertex}: angle {theta} outside [0, 2pi)")
        shell = PLSpace.build({v: 0.0 for v in angles}, simplices, max_dim=max_dim)
        edges = set(shell.simplices_of_dim(1))
        table: dict[tuple[int, int], int] = {}
        for (u, v), w in (windings or {}).items():
            if not isinstance(w, int) or isinstance(w, bool):
                raise ValidationError(f"edge ({u}, {v}): winding must be an integer")
            key, value = ((u, v), w) if u < v else ((v, u), -w)
            if key not in edges:
                raise ValidationError(f"winding given for missing edge {list(key)}")
            if key in table:
                raise ValidationError(f"duplicate winding for edge {list(key)}")
            table[key] = value
        full = {edge: table.get(edge, 0) for edge in edges}
        space = cls(dict(angles), shell.simplices, full)
        for triangle in shell.simplices_of_dim(2):
            a, b, c = triangle
            if space.winding(a, b) + space.winding(b, c) - space.winding(a, c):
                raise ValidationError(
                    f"simplex {list(triangle)}: edge windings violate the "
                    "cocycle condition")
        return space

    def winding(self, u: int, v: int) -> int:
        if u < v:
            return self.windings[(u, v)]
        return -self.windings[(v, u)]

    def distinct_angles(self) -> int:
        return len(set(self.angles.values()))

    def default_periods(self) -> int:
        return max(3, self.distinct_angles() + 2)


def load_angle_space(document, max_dim: int = DEFAULT_MAX_DIM) -> AngleSpace:
    """Build an AngleSpace from its JSON document form.

    Expected shape: ``{"vertices": [{"id": 0, "angle": 0.0}, ...],
    "simplices": [[0, 1], ...], "windings": [{"edge": [0, 1], "w": 1}, ...]}``
    (the ``windings`` list is optional; unlisted edges wind zero).
    """
    if not isinstance(document, dict):
        raise ValidationError("input document must be a JSON object")
    vertices = document.get("vertices")
    if not isinstance(vertices, list) or not vertices:
        raise ValidationError("'vertices' must be a non-empty list")
    angles: dict[int, float] = {}
    for entry in vertices:
        if not isinstance(entry, dict) or "id" not in entry or "angle" not in entry:
            raise ValidationError(
                f"vertex entry {entry!r} must be an object with 'id' and 'angle'")
        vertex, theta = entry["id"], entry["angle"]
        if not isinstance(vertex, int) or isinstance(vertex, bool):
            raise ValidationError(f"vertex id {vertex!r} must be an integer")
        if vertex in angles:
            raise ValidationError(f"duplicate vertex id {vertex}")
        if not isinstance(theta, (int, float)) or isinstance(theta, bool):
            raise ValidationError(f"vertex {vertex}: angle must be a number")
        angles[vertex] = float(theta)
    simplices = document.get("simplices")
    if not isinstance(simplices, list) or not simplices:
        raise ValidationError("'simplices' must be a non-empty list")
    windings: dict[tuple[int, int], int] = {}
    raw = document.get("windings", [])
    if not isinstance(raw, list):
        raise ValidationError("'windings' must be a list")
    for entry in raw:
        if not isinstance(entry, dict) or "edge" not in entry or "w" not in entry:
            raise ValidationError(
                f"winding entry {entry!r} must be an object with 'edge' and 'w'")
        edge = entry["edge"]
        if (not isinstance(edge, list) or len(edge) != 2
                or any(not isinstance(u, int) or isinstance(u, bool) for u in edge)
                or edge[0] == edge[1]):
            raise ValidationError(f"winding edge {edge!r} must name two distinct vertices")
        u, v = edge
        if (u, v) in windings or (v, u) in windings:
            raise ValidationError(f"duplicate winding for edge {sorted(edge)}")
        windings[(u, v)] = entry["w"]
    return AngleSpace.build(angles, simplices, windings, max_dim=max_dim)


def _tagged_cover(a: AngleSpace, periods: int
                  ) -> tuple[PLSpace, dict[int, tuple[float, int]]]:
    if periods < 3:
        raise ValidationError("cover needs at least 3 periods")
    order = sorted(a.angles)
    index = {v: i for i, v in enumerate(order)}
    stride = len(order)

    def lift_id(v: int, k: int) -> int:
        return k * stride + index[v]

    values: dict[int, float] = {}
    tags: dict[int, tuple[float, int]] = {}
    for v in order:
        for k in range(periods):
            values[lift_id(v, k)] = a.angles[v] + TWO_PI * k
            tags[lift_id(v, k)] = (a.angles[v], k)

    lifted: list[Simplex] = []
    for simplex in a.simplices:
        base = simplex[0]
        offsets = [a.winding(base, v) if v != base else 0 for v in simplex]
        low = min(offsets)
        shifted = [o - low for o in offsets]
        span = max(shifted)
        if span > periods - 1:
            raise ValidationError(
                f"simplex {list(simplex)}: winding span {span} does not fit a "
                f"{periods}-period window")
        for k in range(periods - span):
            lifted.append(tuple(lift_id(v, k + o)
                                for v, o in zip(simplex, shifted)))
    return PLSpace.build(values, lifted), tags


def build_cover(a: AngleSpace, periods: int) -> PLSpace:
    """The pullback of the map along ``periods`` turns of the line over the
    circle: vertex (v, k) gets value theta(v) + 2pi*k, simplices lift by
    their winding offsets, and lifts poking outside the window are dropped."""
    space, _ = _tagged_cover(a, periods)
    return space


@dataclass
class QuotientBarcode:
    """Level bars of the cover modulo 2pi-translation.

    Each orbit is represented by its translate with left endpoint in
    [0, 2pi).  ``unbounded`` counts shift-invariant families (bars touching
    both inner-window boundaries) per degree; ``periods`` records the window
    actually used and stays out of equality so results from different windows
    can be compared directly.
    """

    bars: dict[int, Counter] = dc_field(default_factory=dict)
    unbounded: dict[int, int] = dc_field(default_factory=dict)
    periods: int = dc_field(default=0, compare=False)

    def __post_init__(self) -> None:
        self.bars = prune_degrees(self.bars)
        self.unbounded = {d: c for d, c in sorted(self.unbounded.items()) if c}

    def degrees(self) -> list[int]:
        return sorted(set(self.bars) | set(self.unbounded))

    def select(self, degree: int, left_closed: bool, right_closed: bool) -> Counter:
        pool = self.bars.get(degree, Counter())
        return Counter({bar: m for bar, m in pool.items()
                        if bar.left_closed == left_closed
                        and bar.right_closed == right_closed})


def _endpoint_tags(cover: PLSpace, tags: dict[int, tuple[float, int]]
                   ) -> dict[float, tuple[float, int]]:
    by_value: dict[float, tuple[float, int]] = {}
    for vertex, tag in tags.items():
        value = cover.values[vertex]
        known = by_value.get(value)
        if known is not None and known != tag:
            raise ValidationError(
                f"cover values collide at {value}: tags {known} and {tag}")
        by_value[value] = tag
    return by_value


def quotient_barcodes(a: AngleSpace, field: PrimeField,
                      periods: int | None = None) -> QuotientBarcode:
    """Quotient level barcode of the angle-valued map.

    Bars of the cover contained in the inner window [2pi, 2pi*(periods-1)]
    are grouped into 2pi-translation orbits; each orbit must fill its full
    range of window positions with one common multiplicity, and the period-1
    and period-2 multisets must agree, otherwise a StabilizationError asks
    for a larger window.
    """
    n = a.default_periods() if periods is None else periods
    cover, tags = _tagged_cover(a, n)
    by_value = _endpoint_tags(cover, tags)
    lifted = level_barcodes(cover, field)

    unbounded: dict[int, int] = {}
    orbits: dict[tuple, dict[int, int]] = {}
    for bar, mult in lifted.all_bars():
        theta_l, k_l = by_value[bar.left]
        theta_r, k_r = by_value[bar.right]
        meets_left = k_l == 0 or (k_l == 1 and theta_l == 0.0)
        meets_right = k_r == n - 1
        if meets_left and meets_right:
            unbounded[bar.degree] = unbounded.get(bar.degree, 0) + mult
            continue
        contained = k_l >= 1 and (k_r <= n - 2 or (k_r == n - 1 and theta_r == 0.0))
        if not contained:
            continue
        key = (bar.degree, bar.left_closed, bar.right_closed,
               theta_l, theta_r, k_r - k_l)
        orbits.setdefault(key, {})[k_l] = \
            orbits.get(key, {}).get(k_l, 0) + mult

    bars: dict[int, Counter] = {}
    period_one: Counter = Counter()
    period_two: Counter = Counter()
    for key, translates in sorted(orbits.items()):
        degree, left_closed, right_closed, theta_l, theta_r, shift = key
        high = (n - 1 if theta_r == 0.0 else n - 2) - shift
        expected = set(range(1, high + 1))
        mults = set(translates.values())
        if set(translates) != expected or len(mults) != 1:
            raise StabilizationError(
                f"orbit of {theta_l:.6g}..{theta_r + TWO_PI * shift:.6g} in "
                f"degree {degree} occupies window positions "
                f"{sorted(translates)} with multiplicities "
                f"{sorted(translates.values())}; expected positions "
                f"{sorted(expected)} with one common multiplicity. "
                f"Recompute with more than {n} periods.")
        mult = mults.pop()
        rep = Bar(degree, theta_l, theta_r + TWO_PI * shift,
                  left_closed, right_closed)
        bars.setdefault(degree, Counter())[rep] += mult
        if 1 in translates:
            period_one[key] += translates[1]
        if 2 in translates:
            period_two[key] += translates[2]
    if n >= 4 and period_one != period_two:
        raise StabilizationError(
            "per-period bar multisets disagree between the first two interior "
            f"periods; recompute with more than {n} periods.")
    return QuotientBarcode(bars=bars, unbounded=unbounded, periods=n)


def novikov_betti(q: QuotientBarcode, top_degree: int | None = None
                  ) -> dict[int, int]:
    """Novikov Betti numbers: closed r-bars plus open (r-1)-bars of the
    quotient, multiplicities included."""
    if top_degree is None:
        top_degree = max((d for d in q.degrees()), default=0) + 1
    counts = {r: 0 for r in range(top_degree + 1)}
    for degree, pool in q.bars.items():
        for bar, mult in pool.items():
            if bar.kind == CLOSED:
                counts[degree] = counts.get(degree, 0) + mult
            elif bar.kind == OPEN:
                counts[degree + 1] = counts.get(degree + 1, 0) + mult
    return counts
