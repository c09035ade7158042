"""Prime-field arithmetic and sparse column reduction.

Everything downstream (sub-level pairing, zigzag ranks, Morse counts) bottoms
out in the operations here: column-reduce a sparse matrix over F_p with the
lowest-nonzero-row pivoting convention and read off ranks, kernels and column
memberships.  Columns are stored as row-sorted (row, coefficient) lists with
coefficients kept as canonical representatives in 0..p-1, so matrix equality
is plain structural equality and serialization is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Iterable, Sequence

Column = list[tuple[int, int]]


class StructuralError(ValueError):
    """Malformed algebraic data: bad characteristic, unsorted or out-of-range
    column entries, incompatible shapes."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class PrimeField:
    """The coefficient field F_p.  Characteristics here are tiny, so primality
    is checked by trial division at construction time."""

    p: int

    def __post_init__(self) -> None:
        if not isinstance(self.p, int) or not _is_prime(self.p):
            raise StructuralError(f"field characteristic must be a prime, got {self.p!r}")

    def normalize(self, a: int) -> int:
        return a % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise StructuralError("0 has no inverse")
        return pow(a, -1, self.p)


def axpy(field: PrimeField, target: Column, factor: int, source: Column) -> Column:
    """target + factor * source, both row-sorted sparse columns over F_p."""
    p = field.p
    factor %= p
    if factor == 0:
        return list(target)
    out: Column = []
    i = j = 0
    nt, ns = len(target), len(source)
    while i < nt and j < ns:
        ri, rj = target[i][0], source[j][0]
        if ri < rj:
            out.append(target[i])
            i += 1
        elif rj < ri:
            c = (factor * source[j][1]) % p
            if c:
                out.append((rj, c))
            j += 1
        else:
            c = (target[i][1] + factor * source[j][1]) % p
            if c:
                out.append((ri, c))
            i += 1
            j += 1
    out.extend(target[i:])
    for r, v in source[j:]:
        c = (factor * v) % p
        if c:
            out.append((r, c))
    return out


@dataclass(frozen=True)
class SparseMatrix:
    """Column-major sparse matrix over a prime field.

    ``columns[j]`` is a row-sorted list of (row, coefficient) pairs with
    coefficients in 1..p-1; structural validity is enforced on construction.
    """

    rows: int
    cols: int
    columns: tuple[tuple[tuple[int, int], ...], ...]
    field: PrimeField

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise StructuralError("negative matrix shape")
        if len(self.columns) != self.cols:
            raise StructuralError(
                f"expected {self.cols} columns, got {len(self.columns)}")
        p = self.field.p
        for j, col in enumerate(self.columns):
            prev = -1
            for row, coeff in col:
                if not 0 <= row < self.rows:
                    raise StructuralError(f"column {j}: row {row} out of range")
                if row <= prev:
                    raise StructuralError(f"column {j}: rows not strictly increasing")
                if not 1 <= coeff < p:
                    raise StructuralError(
                        f"column {j}: coefficient {coeff} not reduced mod {p}")
                prev = row

    @classmethod
    def from_entries(cls, rows: int, cols: int,
                     entries: Iterable[tuple[int, int, int]],
                     field: PrimeField) -> "SparseMatrix":
        """Build from (row, col, coefficient) triples; repeats accumulate."""
        acc: dict[int, dict[int, int]] = {}
        for row, col, coeff in entries:
            if not (0 <= row < rows and 0 <= col < cols):
                raise StructuralError(f"entry ({row}, {col}) out of range")
            bucket = acc.setdefault(col, {})
            bucket[row] = (bucket.get(row, 0) + coeff) % field.p
        columns = []
        for j in range(cols):
            col = sorted((r, c) for r, c in acc.get(j, {}).items() if c)
            columns.append(tuple(col))
        return cls(rows, cols, tuple(columns), field)

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence[int]], field: PrimeField) -> "SparseMatrix":
        rows = len(dense)
        cols = len(dense[0]) if rows else 0
        entries = []
        for i, row in enumerate(dense):
            if len(row) != cols:
                raise StructuralError("ragged dense matrix")
            for j, v in enumerate(row):
                if v % field.p:
                    entries.append((i, j, v))
        return cls.from_entries(rows, cols, entries, field)

    @classmethod
    def from_columns(cls, rows: int, cols: Sequence[Column],
                     field: PrimeField) -> "SparseMatrix":
        return cls(rows, len(cols), tuple(tuple(c) for c in cols), field)

    @classmethod
    def zeros(cls, rows: int, cols: int, field: PrimeField) -> "SparseMatrix":
        return cls(rows, cols, tuple(() for _ in range(cols)), field)

    def column(self, j: int) -> Column:
        return list(self.columns[j])

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for j, col in enumerate(self.columns):
            for row, coeff in col:
                out[row][j] = coeff
        return out

    def transpose(self) -> "SparseMatrix":
        entries = [(j, i, c) for j, col in enumerate(self.columns) for i, c in col]
        return SparseMatrix.from_entries(self.cols, self.rows, entries, self.field)

    def is_zero(self) -> bool:
        return all(not col for col in self.columns)


def reduce(m: SparseMatrix) -> tuple[SparseMatrix, dict[int, int]]:
    """Persistence-style column reduction.

    Processes columns left to right, repeatedly adding multiples of earlier
    (already reduced) columns until every nonzero column has a lowest nonzero
    row no other nonzero column shares.  Only left-to-right additions are
    used, so the column span of every prefix is preserved.  Returns the
    reduced matrix together with ``pivots``, mapping each nonzero column to
    its lowest nonzero row.
    """
    field = m.field
    reduced: list[Column] = []
    owner: dict[int, int] = {}  # lowest row -> column owning it
    pivots: dict[int, int] = {}
    for j in range(m.cols):
        col = m.column(j)
        while col:
            low, coeff = col[-1]
            k = owner.get(low)
            if k is None:
                break
            base = reduced[k]
            factor = field.neg(coeff * field.inv(base[-1][1]))
            col = axpy(field, col, factor, base)
        reduced.append(col)
        if col:
            low = col[-1][0]
            owner[low] = j
            pivots[j] = low
    return SparseMatrix.from_columns(m.rows, reduced, field), pivots


def rank(m: SparseMatrix) -> int:
    return len(reduce(m)[1])


class ColumnSolver:
    """Incremental column-space membership with coefficient tracking.

    Columns are inserted under hashable labels.  ``express`` writes a vector
    as an explicit combination of the inserted originals whenever it lies in
    their span; this is the primitive behind kernel bases and homology-class
    coordinates.
    """

    def __init__(self, field: PrimeField, rows: int) -> None:
        self.field = field
        self.rows = rows
        self._cols: list[Column] = []
        self._combos: list[dict[Hashable, int]] = []
        self._pivot: dict[int, int] = {}

    @property
    def rank(self) -> int:
        return len(self._cols)

    def _reduce(self, column: Column) -> tuple[Column, dict[Hashable, int]]:
        # Invariant: input column == residual + sum(combo[l] * original_l).
        p = self.field.p
        col = list(column)
        combo: dict[Hashable, int] = {}
        while col:
            low, coeff = col[-1]
            k = self._pivot.get(low)
            if k is None:
                break
            base = self._cols[k]
            factor = (coeff * self.field.inv(base[-1][1])) % p
            col = axpy(self.field, col, (-factor) % p, base)
            for label, c in self._combos[k].items():
                combo[label] = (combo.get(label, 0) + factor * c) % p
        return col, {l: c for l, c in combo.items() if c}

    def insert(self, label: Hashable, column: Column) -> bool:
        """Insert a column; returns False when it was already in the span."""
        col, combo = self._reduce(column)
        if not col:
            return False
        stored = {label: 1}
        for l, c in combo.items():
            stored[l] = self.field.neg(c)
        self._cols.append(col)
        self._combos.append(stored)
        self._pivot[col[-1][0]] = len(self._cols) - 1
        return True

    def express(self, column: Column) -> dict[Hashable, int] | None:
        """Coefficients over inserted originals, or None if out of span."""
        col, combo = self._reduce(column)
        if col:
            return None
        return combo


def kernel_basis(m: SparseMatrix) -> list[Column]:
    """A basis of the kernel, as sparse vectors indexed by column position."""
    solver = ColumnSolver(m.field, m.rows)
    basis: list[Column] = []
    for j in range(m.cols):
        col = m.column(j)
        combo = solver.express(col)
        if combo is None:
            solver.insert(j, col)
        else:
            vec = [(j, 1)]
            for l, c in combo.items():
                vec.append((int(l), m.field.neg(c)))
            basis.append(sorted(vec))
    return basis


def compose(a: SparseMatrix, b: SparseMatrix) -> SparseMatrix:
    """Matrix product a @ b."""
    if a.cols != b.rows:
        raise StructuralError(f"shape mismatch: {a.rows}x{a.cols} @ {b.rows}x{b.cols}")
    if a.field != b.field:
        raise StructuralError("field mismatch")
    cols: list[Column] = []
    for j in range(b.cols):
        acc: Column = []
        for r, c in b.columns[j]:
            acc = axpy(a.field, acc, c, a.column(r))
        cols.append(acc)
    return SparseMatrix.from_columns(a.rows, cols, a.field)


def identity(n: int, field: PrimeField) -> SparseMatrix:
    return SparseMatrix.from_entries(n, n, [(i, i, 1) for i in range(n)], field)
