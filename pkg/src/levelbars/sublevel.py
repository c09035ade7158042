"""Sub-level persistence by column reduction over the lower-star order.

One global boundary matrix is laid out in sublevel order and reduced with the
lowest-row pivot convention.  A pivot pairs a creator simplex with the
destroyer that kills its class; unpaired creators give unbounded bars.  Pairs
whose filtration values coincide carry no bar and are only counted in the
diagnostics.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field

from levelbars import algebra
from levelbars.algebra import PrimeField, SparseMatrix
from levelbars.bars import Bar, prune_degrees
from levelbars.plcomplex import PLSpace, Simplex, boundary_faces, sublevel_order


@dataclass
class SublevelBarcodes:
    """Per-degree unbounded and bounded bar multisets.

    ``pairs``, ``dropped_zero_length`` and ``invisible`` are diagnostic side
    channels and do not take part in equality: the first two record the
    creator/destroyer pairing, the last receives bars a refinement had to
    drop (nothing writes it on the direct computation path).
    """

    infinite: dict[int, Counter] = field(default_factory=dict)
    finite: dict[int, Counter] = field(default_factory=dict)
    pairs: list[tuple[Simplex, Simplex]] = field(default_factory=list, compare=False)
    dropped_zero_length: int = field(default=0, compare=False)
    invisible: dict[int, Counter] = field(default_factory=dict, compare=False)

    def __post_init__(self) -> None:
        self.infinite = prune_degrees(self.infinite)
        self.finite = prune_degrees(self.finite)

    def degrees(self) -> list[int]:
        return sorted(set(self.infinite) | set(self.finite))


def sublevel_barcodes(space: PLSpace, field: PrimeField) -> SublevelBarcodes:
    order = sublevel_order(space)
    index = {s: i for i, s in enumerate(order)}
    n = len(order)
    entries = []
    for j, simplex in enumerate(order):
        if len(simplex) == 1:
            continue
        for face, sign in boundary_faces(simplex):
            entries.append((index[face], j, sign))
    matrix = SparseMatrix.from_entries(n, n, entries, field)
    _, pivots = algebra.reduce(matrix)
    paired_rows = set(pivots.values())

    infinite: dict[int, Counter] = {}
    finite: dict[int, Counter] = {}
    pairs: list[tuple[Simplex, Simplex]] = []
    dropped = 0
    for j, simplex in enumerate(order):
        if j in pivots:
            creator = order[pivots[j]]
            a, b = space.upper_value(creator), space.upper_value(simplex)
            pairs.append((creator, simplex))
            if a == b:
                dropped += 1
            else:
                degree = len(creator) - 1
                bar = Bar(degree, a, b, left_closed=False, right_closed=False)
                finite.setdefault(degree, Counter())[bar] += 1
        elif j not in paired_rows:
            degree = len(simplex) - 1
            bar = Bar(degree, space.upper_value(simplex), math.inf,
                      left_closed=False, right_closed=False)
            infinite.setdefault(degree, Counter())[bar] += 1
    return SublevelBarcodes(infinite=infinite, finite=finite, pairs=pairs,
                            dropped_zero_length=dropped)
