"""Level persistence via the levelset zigzag.

Nodes alternate interlevel pieces around one critical value with regular
fibers between them; the maps are inclusion-induced on a common refinement
sliced at all critical and regular values once.  Interval multiplicities come
from window ranks: over any window of nodes, the rank of the natural map from
the window's limit to its colimit counts exactly the summands whose support
contains the window, and inclusion-exclusion over windows isolates each
interval.  The decomposition is then translated to bars through the endpoint
dictionary (interlevel endpoint = closed at its critical value, fiber
endpoint = open at the adjacent critical value).
"""

from __future__ import annotations

from bisect import bisect_left
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from levelbars import algebra
from levelbars.algebra import (Column, ColumnSolver, PrimeField, SparseMatrix,
                               StructuralError, kernel_basis)
from levelbars.bars import Bar, prune_degrees
from levelbars.plcomplex import (PLSpace, Simplex, SlicedSpace, boundary_faces,
                                 interlevel, level_values, slice_space)


@dataclass(frozen=True)
class NodeSlice:
    """One zigzag node: its subcomplex plus the bar-endpoint labels.

    A bar starting here opens or closes at ``birth``; one ending here opens
    or closes at ``death``.
    """

    kind: str  # "interlevel" | "level"
    lo: float
    hi: float
    critical: float | None
    birth: tuple[float, bool]
    death: tuple[float, bool]
    simplices: tuple[Simplex, ...]


@dataclass(frozen=True)
class ZigzagArrow:
    source: int
    target: int
    matrix: SparseMatrix


@dataclass
class ZigzagModule:
    degree: int
    field: PrimeField
    nodes: list[NodeSlice]
    dims: list[int]
    arrows: list[ZigzagArrow]

    def __post_init__(self) -> None:
        for arrow in self.arrows:
            if abs(arrow.source - arrow.target) != 1:
                raise StructuralError("zigzag arrows must join adjacent nodes")
            if arrow.matrix.rows != self.dims[arrow.target] or \
                    arrow.matrix.cols != self.dims[arrow.source]:
                raise StructuralError("arrow matrix shape inconsistent with node dims")


@dataclass(frozen=True)
class IntervalSummand:
    first: int
    last: int
    multiplicity: int


def zigzag_layout(space: PLSpace, samples_per_gap: int = 1
                  ) -> tuple[SlicedSpace, list[NodeSlice]]:
    """Slice once at all critical and regular values and lay out the nodes.

    ``samples_per_gap`` regular values are placed evenly in each gap between
    consecutive critical values (1 gives midpoints).  Extra samples only add
    isomorphism arrows, so barcodes are unaffected; the doubled-sampling
    property tests rely on exactly that.
    """
    if samples_per_gap < 1:
        raise StructuralError("samples_per_gap must be at least 1")
    crit = level_values(space)
    regulars: list[float] = []
    for k in range(len(crit) - 1):
        lo, hi = crit[k], crit[k + 1]
        step = (hi - lo) / (samples_per_gap + 1)
        for i in range(1, samples_per_gap + 1):
            regulars.append(lo + i * step)
    cut_levels = sorted(set(crit) | set(regulars))
    sliced = slice_space(space, cut_levels)

    def gap_labels(x: float) -> tuple[tuple[float, bool], tuple[float, bool]]:
        idx = bisect_left(crit, x)
        return (crit[idx - 1], False), (crit[idx], False)

    bounds = [crit[0] - 1.0] + regulars + [crit[-1] + 1.0]
    nodes: list[NodeSlice] = []
    for i in range(len(bounds) - 1):
        lo, hi = bounds[i], bounds[i + 1]
        inside = [t for t in crit if lo <= t <= hi]
        if len(inside) > 1:
            raise StructuralError("interlevel window contains several critical values")
        if inside:
            t = inside[0]
            birth = death = (t, True)
            critical: float | None = t
        else:
            birth, death = gap_labels(lo)
            critical = None
        nodes.append(NodeSlice("interlevel", lo, hi, critical, birth, death,
                               interlevel(sliced, lo, hi).simplices))
        if i + 1 < len(bounds) - 1:
            s = bounds[i + 1]
            birth, death = gap_labels(s)
            nodes.append(NodeSlice("level", s, s, None, birth, death,
                                   interlevel(sliced, s, s).simplices))
    return sliced, nodes


class _NodeHomology:
    """Cycles-mod-boundaries data for one node in one degree, with coordinates
    of arbitrary cycles in the chosen homology basis."""

    def __init__(self, simplices: Sequence[Simplex], field: PrimeField, degree: int):
        self.field = field
        self.cells = sorted(s for s in simplices if len(s) == degree + 1)
        self.index = {s: i for i, s in enumerate(self.cells)}
        below = sorted(s for s in simplices if len(s) == degree)
        below_index = {s: i for i, s in enumerate(below)}
        above = sorted(s for s in simplices if len(s) == degree + 2)

        entries = []
        if degree > 0:
            for j, s in enumerate(self.cells):
                for face, sign in boundary_faces(s):
                    entries.append((below_index[face], j, sign))
        boundary = SparseMatrix.from_entries(len(below), len(self.cells),
                                             entries, field)
        cycles = kernel_basis(boundary)

        self.solver = ColumnSolver(field, len(self.cells))
        for j, s in enumerate(above):
            col: Column = []
            for face, sign in boundary_faces(s):
                col = algebra.axpy(field, col, sign, [(self.index[face], 1)])
            self.solver.insert(("b", j), col)
        self.reps: list[Column] = []
        for z in cycles:
            if self.solver.express(z) is None:
                self.solver.insert(("h", len(self.reps)), z)
                self.reps.append(z)
        self.dim = len(self.reps)

    def coords(self, cycle: Column) -> Column:
        combo = self.solver.express(cycle)
        if combo is None:
            raise StructuralError("vector is not a cycle of this node")
        col = [(label[1], c) for label, c in combo.items() if label[0] == "h"]
        return sorted(col)


def _modules_from_layout(nodes: list[NodeSlice], field: PrimeField,
                         degrees: Sequence[int]) -> dict[int, ZigzagModule]:
    out: dict[int, ZigzagModule] = {}
    for degree in degrees:
        data = [_NodeHomology(node.simplices, field, degree) for node in nodes]
        dims = [d.dim for d in data]
        arrows: list[ZigzagArrow] = []
        for k, node in enumerate(nodes):
            if node.kind != "level":
                continue
            for target in (k - 1, k + 1):
                cols = []
                for rep in data[k].reps:
                    lifted = sorted((data[target].index[data[k].cells[i]], c)
                                    for i, c in rep)
                    cols.append(data[target].coords(lifted))
                matrix = SparseMatrix.from_columns(data[target].dim, cols, field)
                arrows.append(ZigzagArrow(k, target, matrix))
        out[degree] = ZigzagModule(degree, field, list(nodes), dims, arrows)
    return out


def build_zigzag(space: PLSpace, field: PrimeField, degree: int,
                 samples_per_gap: int = 1) -> ZigzagModule:
    _, nodes = zigzag_layout(space, samples_per_gap=samples_per_gap)
    return _modules_from_layout(nodes, field, [degree])[degree]


def _window_rank(z: ZigzagModule, i: int, j: int) -> int:
    """Number of interval summands whose support contains nodes i..j.

    Computed as the rank of the natural map from the window's limit to its
    colimit: summands fully covering the window contribute identity, partial
    overlaps lose either their section (arrow pointing in at the break) or
    their colimit class (arrow pointing out).
    """
    dims = z.dims
    window = range(i, j + 1)
    if any(dims[k] == 0 for k in window):
        return 0
    if i == j:
        return dims[i]
    offset = {}
    total = 0
    for k in window:
        offset[k] = total
        total += dims[k]
    arrows = [a for a in z.arrows if i <= a.source <= j and i <= a.target <= j]

    field = z.field
    relation_cols: list[Column] = []
    constraint_entries: list[tuple[int, int, int]] = []
    row_base = 0
    for arrow in arrows:
        mat = arrow.matrix
        for s in range(dims[arrow.source]):
            col: Column = [(offset[arrow.source] + s, 1)]
            for r, c in mat.columns[s]:
                col.append((offset[arrow.target] + r, field.neg(c)))
            relation_cols.append(sorted(col))
        for s in range(dims[arrow.source]):
            for r, c in mat.columns[s]:
                constraint_entries.append((row_base + r, offset[arrow.source] + s, c))
        for r in range(dims[arrow.target]):
            constraint_entries.append((row_base + r, offset[arrow.target] + r, -1))
        row_base += dims[arrow.target]

    constraints = SparseMatrix.from_entries(row_base, total, constraint_entries, field)
    sections = kernel_basis(constraints)
    # project each section to the leftmost node's block and re-embed
    left_cols: list[Column] = []
    for vec in sections:
        left_cols.append([(r, c) for r, c in vec if r < dims[i]])
    base = SparseMatrix.from_columns(total, relation_cols, field)
    joint = SparseMatrix.from_columns(total, relation_cols + left_cols, field)
    return algebra.rank(joint) - algebra.rank(base)


def decompose(z: ZigzagModule) -> list[IntervalSummand]:
    """Interval decomposition of the zigzag, as (first, last, multiplicity).

    The direct sum of interval modules with these multiplicities matches the
    module's node dimensions and arrow ranks; multiplicities come from
    inclusion-exclusion over the window ranks.
    """
    n = len(z.dims)
    ranks: dict[tuple[int, int], int] = {}
    for i in range(n):
        for j in range(i, n):
            ranks[(i, j)] = _window_rank(z, i, j)
    out = []
    for i in range(n):
        for j in range(i, n):
            m = (ranks[(i, j)]
                 - ranks.get((i - 1, j), 0)
                 - ranks.get((i, j + 1), 0)
                 + ranks.get((i - 1, j + 1), 0))
            if m < 0:
                raise StructuralError(
                    f"inconsistent window ranks at ({i}, {j}): multiplicity {m}")
            if m:
                out.append(IntervalSummand(i, j, m))
    return out


@dataclass
class LevelBarcodes:
    """Level persistence bars, one Counter per degree; the four kinds are
    distinguished by the endpoint flags on each Bar."""

    by_degree: dict[int, Counter]

    def __post_init__(self) -> None:
        self.by_degree = prune_degrees(self.by_degree)

    def degrees(self) -> list[int]:
        return sorted(self.by_degree)

    def _select(self, degree: int, left_closed: bool, right_closed: bool) -> Counter:
        pool = self.by_degree.get(degree, Counter())
        return Counter({bar: m for bar, m in pool.items()
                        if bar.left_closed == left_closed
                        and bar.right_closed == right_closed})

    def closed_bars(self, degree: int) -> Counter:
        return self._select(degree, True, True)

    def open_bars(self, degree: int) -> Counter:
        return self._select(degree, False, False)

    def closed_open_bars(self, degree: int) -> Counter:
        return self._select(degree, True, False)

    def open_closed_bars(self, degree: int) -> Counter:
        return self._select(degree, False, True)

    def degenerate_closed_bars(self, degree: int) -> Counter:
        pool = self.closed_bars(degree)
        return Counter({bar: m for bar, m in pool.items() if bar.left == bar.right})

    def all_bars(self):
        for degree in self.degrees():
            for bar, m in self.by_degree[degree].items():
                yield bar, m


def level_barcodes(space: PLSpace, field: PrimeField,
                   samples_per_gap: int = 1) -> LevelBarcodes:
    """Level persistence barcodes in every degree up to the complex dimension."""
    _, nodes = zigzag_layout(space, samples_per_gap=samples_per_gap)
    degrees = list(range(space.dimension + 1))
    modules = _modules_from_layout(nodes, field, degrees)
    by_degree: dict[int, Counter] = {}
    for degree in degrees:
        module = modules[degree]
        counter: Counter = Counter()
        for summand in decompose(module):
            birth_value, birth_closed = nodes[summand.first].birth
            death_value, death_closed = nodes[summand.last].death
            bar = Bar(degree, birth_value, death_value, birth_closed, death_closed)
            counter[bar] += summand.multiplicity
        if counter:
            by_degree[degree] = counter
    return LevelBarcodes(by_degree)
