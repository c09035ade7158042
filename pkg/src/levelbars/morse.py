"""Chain complexes of based vector spaces filtered by generator values.

Covers four jobs: validating that boundary data is a value-decreasing chain
complex, its Hodge numbers (c, beta, rho), recovering those numbers from
level barcodes (globally and per sublevel threshold), and rebuilding the
filtered complex itself from the bars, with generators named by the bars
that spawn them.  The rebuilt complex can then be compared numerically to an
independently given chain complex.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from levelbars import algebra
from levelbars.algebra import PrimeField, SparseMatrix
from levelbars.bars import CLOSED, CLOSED_OPEN, OPEN, OPEN_CLOSED, Bar
from levelbars.levelset import LevelBarcodes
from levelbars.plcomplex import ValidationError


@dataclass(frozen=True)
class Generator:
    degree: int
    value: float
    name: str


@dataclass(frozen=True)
class ChainComplex:
    """Generators by degree plus boundary matrices d_r: C_r -> C_{r-1}."""

    field: PrimeField
    generators: dict[int, tuple[Generator, ...]]
    boundaries: dict[int, SparseMatrix]

    def dim(self, degree: int) -> int:
        return len(self.generators.get(degree, ()))

    def top_degree(self) -> int:
        return max(self.generators, default=0)

    def boundary(self, degree: int) -> SparseMatrix:
        got = self.boundaries.get(degree)
        if got is not None:
            return got
        return SparseMatrix.zeros(self.dim(degree - 1), self.dim(degree),
                                  self.field)


def load_chain_complex(document, field: PrimeField) -> ChainComplex:
    """Build a ChainComplex from its JSON document form.

    Expected shape: ``{"generators": [{"degree": 1, "value": 2.0,
    "name": "s"}, ...], "boundaries": {"1": [[row, col, coeff], ...]}}``
    where boundary ``"r"`` lists entries of d_r with rows indexing degree
    r-1 generators and columns degree r generators, in listing order.
    """
    if not isinstance(document, dict):
        raise ValidationError("input document must be a JSON object")
    raw_gens = document.get("generators")
    if not isinstance(raw_gens, list):
        raise ValidationError("'generators' must be a list")
    by_degree: dict[int, list[Generator]] = {}
    names: set[str] = set()
    for entry in raw_gens:
        if not isinstance(entry, dict) or not {"degree", "value", "name"} <= set(entry):
            raise ValidationError(
                f"generator entry {entry!r} must have 'degree', 'value', 'name'")
        degree, value, name = entry["degree"], entry["value"], entry["name"]
        if not isinstance(degree, int) or isinstance(degree, bool) or degree < 0:
            raise ValidationError(f"generator {name!r}: bad degree {degree!r}")
        if not isinstance(value, (int, float)) or isinstance(value, bool) \
                or not math.isfinite(value):
            raise ValidationError(f"generator {name!r}: bad value {value!r}")
        if not isinstance(name, str) or not name:
            raise ValidationError(f"generator name {name!r} must be a non-empty string")
        if name in names:
            raise ValidationError(f"duplicate generator name {name!r}")
        names.add(name)
        by_degree.setdefault(degree, []).append(Generator(degree, float(value), name))
    generators = {d: tuple(gens) for d, gens in sorted(by_degree.items())}

    raw_bnd = document.get("boundaries", {})
    if not isinstance(raw_bnd, dict):
        raise ValidationError("'boundaries' must be an object keyed by degree")
    boundaries: dict[int, SparseMatrix] = {}
    for key, entries in raw_bnd.items():
        try:
            degree = int(key)
        except (TypeError, ValueError):
            raise ValidationError(f"boundary key {key!r} is not a degree") from None
        if degree < 1:
            raise ValidationError(f"boundary degree {degree} must be at least 1")
        rows = len(generators.get(degree - 1, ()))
        cols = len(generators.get(degree, ()))
        if not isinstance(entries, list):
            raise ValidationError(f"boundary {key!r} must be a list of entries")
        triples = []
        for entry in entries:
            if (not isinstance(entry, list) or len(entry) != 3
                    or any(not isinstance(x, int) or isinstance(x, bool)
                           for x in entry)):
                raise ValidationError(
                    f"boundary {key!r} entry {entry!r} must be [row, col, coeff]")
            row, col, coeff = entry
            if not 0 <= row < rows or not 0 <= col < cols:
                raise ValidationError(
                    f"boundary {key!r} entry {entry!r} out of range "
                    f"({rows} rows, {cols} columns)")
            triples.append((row, col, coeff))
        boundaries[degree] = SparseMatrix.from_entries(rows, cols, triples, field)
    return ChainComplex(field, generators, boundaries)


@dataclass(frozen=True)
class Report:
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def validate(complex_: ChainComplex) -> Report:
    """Check d.d = 0 and that every boundary entry decreases the value."""
    problems: list[str] = []
    for degree in sorted(complex_.boundaries):
        matrix = complex_.boundary(degree)
        targets = complex_.generators.get(degree - 1, ())
        sources = complex_.generators.get(degree, ())
        for col, column in enumerate(matrix.columns):
            for row, _ in column:
                if targets[row].value >= sources[col].value:
                    problems.append(
                        f"boundary {degree} entry ({sources[col].name} -> "
                        f"{targets[row].name}): value must decrease, got "
                        f"{sources[col].value} -> {targets[row].value}")
        if degree - 1 in complex_.boundaries:
            square = algebra.compose(complex_.boundary(degree - 1), matrix)
            if not square.is_zero():
                problems.append(
                    f"boundary composition d_{degree - 1} . d_{degree} is nonzero")
    return Report(tuple(problems))


@dataclass(frozen=True)
class HodgeSummary:
    """Per degree: total dimension c, homology dimension beta, and the
    paired-block size rho (rho_r counts the (r, r+1) pairs, so
    c_r = beta_r + rho_r + rho_{r-1})."""

    c: dict[int, int]
    beta: dict[int, int]
    rho: dict[int, int]

    def degrees(self) -> list[int]:
        return sorted(self.c)


def hodge(complex_: ChainComplex) -> HodgeSummary:
    report = validate(complex_)
    if not report.ok:
        raise ValueError("invalid chain complex: " + "; ".join(report.violations))
    top = complex_.top_degree()
    ranks = {r: algebra.rank(complex_.boundary(r)) for r in range(1, top + 2)}
    ranks[0] = 0
    c = {r: complex_.dim(r) for r in range(top + 1)}
    beta = {r: c[r] - ranks[r] - ranks[r + 1] for r in range(top + 1)}
    rho = {r: ranks[r + 1] for r in range(top + 1)}
    for r in range(top + 1):
        if c[r] != beta[r] + rho[r] + rho.get(r - 1, 0):
            raise AssertionError(f"Hodge identity fails in degree {r}")
    return HodgeSummary(c, beta, rho)


@dataclass(frozen=True)
class Counts:
    beta: int
    rho: int
    c: int


def _pool(bars: LevelBarcodes, degree: int, kind: str):
    select = {CLOSED: bars.closed_bars, OPEN: bars.open_bars,
              CLOSED_OPEN: bars.closed_open_bars}[kind]
    return select(degree).items()


def counts_from_barcodes(bars: LevelBarcodes) -> dict[int, Counts]:
    """Betti, paired-block, and total dimensions implied by a level barcode:
    beta_r from closed r-bars and open (r-1)-bars, rho_r from closed-open
    r-bars, c_r from the displayed identity."""
    top = 0
    for bar, _ in bars.all_bars():
        reach = bar.degree + 1 if bar.kind in (OPEN, CLOSED_OPEN) else bar.degree
        top = max(top, reach)
    out: dict[int, Counts] = {}
    rho_below = 0
    for r in range(top + 1):
        beta = sum(m for _, m in _pool(bars, r, CLOSED))
        if r >= 1:
            beta += sum(m for _, m in _pool(bars, r - 1, OPEN))
        rho = sum(m for _, m in _pool(bars, r, CLOSED_OPEN))
        out[r] = Counts(beta, rho, beta + rho + rho_below)
        rho_below = rho
    return out


def counts_at(bars: LevelBarcodes, t: float) -> dict[int, Counts]:
    """Counts of the sublevel stage at threshold t.

    A closed bar contributes to beta once born; a closed-open bar while
    alive, then moves into rho; an open (r-1)-bar contributes to beta_r once
    wholly below t.
    """
    top = 0
    for bar, _ in bars.all_bars():
        reach = bar.degree + 1 if bar.kind in (OPEN, CLOSED_OPEN) else bar.degree
        top = max(top, reach)
    out: dict[int, Counts] = {}
    rho_below = 0
    for r in range(top + 1):
        beta = sum(m for bar, m in _pool(bars, r, CLOSED) if bar.left <= t)
        beta += sum(m for bar, m in _pool(bars, r, CLOSED_OPEN)
                    if bar.left <= t < bar.right)
        if r >= 1:
            beta += sum(m for bar, m in _pool(bars, r - 1, OPEN) if bar.right <= t)
        rho = sum(m for bar, m in _pool(bars, r, CLOSED_OPEN) if bar.right <= t)
        out[r] = Counts(beta, rho, beta + rho + rho_below)
        rho_below = rho
    return out


# Generator keys of the rebuilt complex.  An ("h+", bar, copy) generator sits
# in the bar's own degree and plays the homology role while the bar is alive,
# then the plus role once a closed-open bar dies; a ("minus", bar, copy)
# generator sits one degree up and appears at the same death threshold.
_HPLUS = "h+"
_MINUS = "minus"


@dataclass(frozen=True)
class Stage:
    """One filtration stage: ordered generator keys per degree plus the role
    split (homology / plus / minus) used for reporting."""

    threshold: float
    generators: dict[int, tuple[tuple, ...]]
    homology: dict[int, int]
    plus: dict[int, int]
    minus: dict[int, int]

    def dim(self, degree: int) -> int:
        return len(self.generators.get(degree, ()))

    def degrees(self) -> list[int]:
        return sorted(self.generators)


class FilteredHodgeComplex:
    """The filtered chain complex rebuilt from a level barcode.

    Stages sit at the sorted distinct endpoints of the closed, open, and
    closed-open bars; between stages nothing changes.  The boundary kills
    homology and plus generators and pairs each minus generator with the
    plus generator of the same bar copy.
    """

    def __init__(self, field: PrimeField, bars: LevelBarcodes):
        self.field = field
        self.bars = bars
        endpoints: set[float] = set()
        self._sources: list[tuple[Bar, int]] = []
        for bar, mult in bars.all_bars():
            if bar.kind == OPEN_CLOSED:
                continue
            endpoints.update((bar.left, bar.right))
            self._sources.extend((bar, copy) for copy in range(mult))
        self.thresholds: list[float] = sorted(endpoints)
        self.stages: list[Stage] = [self._stage(t) for t in self.thresholds]

    def _stage(self, t: float) -> Stage:
        keys: dict[int, list[tuple]] = {}
        roles: dict[str, dict[int, int]] = {"h": {}, "p": {}, "m": {}}

        def put(degree: int, key: tuple, role: str) -> None:
            keys.setdefault(degree, []).append(key)
            roles[role][degree] = roles[role].get(degree, 0) + 1

        for bar, copy in self._sources:
            dead = bar.right <= t
            if bar.kind == CLOSED:
                if bar.left <= t:
                    put(bar.degree, (_HPLUS, bar, copy), "h")
            elif bar.kind == OPEN:
                if dead:
                    put(bar.degree + 1, (_HPLUS, bar, copy), "h")
            else:
                if bar.left <= t:
                    put(bar.degree, (_HPLUS, bar, copy), "p" if dead else "h")
                if dead:
                    put(bar.degree + 1, (_MINUS, bar, copy), "m")
        ordered = {d: tuple(sorted(ks, key=_key_order))
                   for d, ks in sorted(keys.items())}
        return Stage(t, ordered, roles["h"], roles["p"], roles["m"])

    def stage_at(self, t: float) -> Stage:
        """The stage in force at value t (empty before the first threshold)."""
        chosen: Stage | None = None
        for stage in self.stages:
            if stage.threshold <= t:
                chosen = stage
        if chosen is None:
            return Stage(t, {}, {}, {}, {})
        return chosen

    def dims(self, t: float) -> dict[int, int]:
        stage = self.stage_at(t)
        return {d: stage.dim(d) for d in stage.degrees()}

    def boundary_matrix(self, t: float, degree: int) -> SparseMatrix:
        stage = self.stage_at(t)
        sources = stage.generators.get(degree, ())
        targets = stage.generators.get(degree - 1, ())
        index = {key: i for i, key in enumerate(targets)}
        entries = []
        for col, key in enumerate(sources):
            if key[0] == _MINUS:
                partner = (_HPLUS, key[1], key[2])
                entries.append((index[partner], col, 1))
        return SparseMatrix.from_entries(len(targets), len(sources), entries,
                                         self.field)

    def inclusion(self, t: float, t_next: float, degree: int) -> SparseMatrix:
        if t > t_next:
            raise ValueError("inclusions only go forward")
        source = self.stage_at(t).generators.get(degree, ())
        target = self.stage_at(t_next).generators.get(degree, ())
        index = {key: i for i, key in enumerate(target)}
        missing = [key for key in source if key not in index]
        if missing:
            raise AssertionError(
                f"generator sets not monotone at {t} -> {t_next}: {missing[0]}")
        entries = [(index[key], col, 1) for col, key in enumerate(source)]
        return SparseMatrix.from_entries(len(target), len(source), entries,
                                         self.field)

    def homology_dim(self, t: float, degree: int) -> int:
        stage = self.stage_at(t)
        cycles = stage.dim(degree) - algebra.rank(self.boundary_matrix(t, degree))
        return cycles - algebra.rank(self.boundary_matrix(t, degree + 1))


def _key_order(key: tuple):
    tag, bar, copy = key
    return (tag, bar.sort_key(), copy)


def reconstruct(bars: LevelBarcodes, field: PrimeField | None = None
                ) -> FilteredHodgeComplex:
    """Rebuild the filtered complex whose barcode is ``bars``."""
    return FilteredHodgeComplex(field or PrimeField(2), bars)


def _sub_betti(complex_: ChainComplex, t: float, degree: int) -> int:
    keep: dict[int, list[int]] = {}
    for d, gens in complex_.generators.items():
        keep[d] = [i for i, g in enumerate(gens) if g.value <= t]

    def cut(r: int) -> SparseMatrix:
        matrix = complex_.boundary(r)
        rows = keep.get(r - 1, [])
        row_pos = {row: i for i, row in enumerate(rows)}
        entries = []
        for new_col, col in enumerate(keep.get(r, [])):
            for row, coeff in matrix.columns[col]:
                if row in row_pos:
                    entries.append((row_pos[row], new_col, coeff))
        return SparseMatrix.from_entries(len(rows), len(keep.get(r, [])),
                                         entries, complex_.field)

    dim = len(keep.get(degree, []))
    return dim - algebra.rank(cut(degree)) - algebra.rank(cut(degree + 1))


def compare(complex_: ChainComplex, rebuilt: FilteredHodgeComplex) -> Report:
    """Numerical isomorphism check between a chain complex and a rebuilt
    filtered complex: per-degree dimensions and Betti numbers of every
    sublevel stage must agree."""
    thresholds = set(rebuilt.thresholds)
    for gens in complex_.generators.values():
        thresholds.update(g.value for g in gens)
    top = max(complex_.top_degree(),
              max((d for s in rebuilt.stages for d in s.degrees()), default=0))
    problems: list[str] = []
    for t in sorted(thresholds):
        for r in range(top + 1):
            mine = sum(1 for g in complex_.generators.get(r, ())
                       if g.value <= t)
            theirs = rebuilt.stage_at(t).dim(r)
            if mine != theirs:
                problems.append(
                    f"dimension mismatch in degree {r} at t={t}: "
                    f"complex has {mine}, reconstruction has {theirs}")
                continue
            beta_mine = _sub_betti(complex_, t, r)
            beta_theirs = rebuilt.homology_dim(t, r)
            if beta_mine != beta_theirs:
                problems.append(
                    f"Betti mismatch in degree {r} at t={t}: "
                    f"complex has {beta_mine}, reconstruction has {beta_theirs}")
    return Report(tuple(problems))
