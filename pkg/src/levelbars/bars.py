"""Bars and barcode multisets.

A bar is a degree plus an interval with independently open or closed ends.
Level persistence produces four finite kinds (closed, open, closed-open,
open-closed); sub-level persistence produces open intervals that may extend
to +infinity.  Multisets are plain Counters keyed by Bar.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

CLOSED = "closed"
OPEN = "open"
CLOSED_OPEN = "closed_open"
OPEN_CLOSED = "open_closed"

_KIND_BY_FLAGS = {
    (True, True): CLOSED,
    (False, False): OPEN,
    (True, False): CLOSED_OPEN,
    (False, True): OPEN_CLOSED,
}
_KIND_ORDER = {CLOSED: 0, OPEN: 1, CLOSED_OPEN: 2, OPEN_CLOSED: 3}


@dataclass(frozen=True)
class Bar:
    degree: int
    left: float
    right: float  # math.inf for unbounded sub-level bars
    left_closed: bool
    right_closed: bool

    def __post_init__(self) -> None:
        if self.degree < 0:
            raise ValueError(f"negative degree {self.degree}")
        if math.isnan(self.left) or math.isnan(self.right):
            raise ValueError("NaN bar endpoint")
        if self.left > self.right:
            raise ValueError(f"inverted bar [{self.left}, {self.right}]")
        if self.left == self.right and not (self.left_closed and self.right_closed):
            raise ValueError(
                f"zero-length bar at {self.left} must be closed on both ends")
        if math.isinf(self.right) and self.right_closed:
            raise ValueError("unbounded bar cannot be right-closed")

    @property
    def kind(self) -> str:
        return _KIND_BY_FLAGS[(self.left_closed, self.right_closed)]

    @property
    def bounded(self) -> bool:
        return not math.isinf(self.right)

    @property
    def length(self) -> float:
        return self.right - self.left

    def sort_key(self) -> tuple:
        return (self.degree, self.left, self.right, _KIND_ORDER[self.kind])

    def __repr__(self) -> str:
        lb = "[" if self.left_closed else "("
        rb = "]" if self.right_closed else ")"
        right = "inf" if math.isinf(self.right) else repr(self.right)
        return f"Bar:{self.degree}:{lb}{self.left}, {right}{rb}"


Barcode = Counter  # Counter[Bar] -> positive multiplicity


def prune(counter: Counter) -> Counter:
    """Drop non-positive multiplicities (Counter arithmetic can leave zeros)."""
    return Counter({bar: m for bar, m in counter.items() if m > 0})


def prune_degrees(by_degree: dict[int, Counter]) -> dict[int, Counter]:
    """Normalize a degree-indexed barcode family for structural equality."""
    out: dict[int, Counter] = {}
    for degree in sorted(by_degree):
        cleaned = prune(by_degree[degree])
        if cleaned:
            out[degree] = cleaned
    return out


def total(counter: Counter) -> int:
    return sum(counter.values())


def serialize_bar(bar: Bar, multiplicity: int) -> dict:
    return {
        "degree": bar.degree,
        "left": bar.left,
        "left_closed": bar.left_closed,
        "right": "inf" if math.isinf(bar.right) else bar.right,
        "right_closed": bar.right_closed,
        "multiplicity": multiplicity,
    }


def serialize_barcode(by_degree: dict[int, Counter]) -> list[dict]:
    """Flat bar list sorted by (degree, left, right, kind)."""
    bars = []
    for degree in sorted(by_degree):
        for bar in sorted(by_degree[degree], key=Bar.sort_key):
            bars.append(serialize_bar(bar, by_degree[degree][bar]))
    return bars
