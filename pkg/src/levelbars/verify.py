"""Executable identities tying the modules together, run over fixtures and a
seeded random corpus.

Every check returns a list of human-readable problems (empty means pass) so
the CLI can exit nonzero with the first counterexample and the test suite
can assert emptiness.  Expensive intermediates (barcodes of a case and of
its negation) are cached per case.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from functools import cached_property

from levelbars import algebra, dictionary, levelset, morse, oracle, sublevel
from levelbars.algebra import PrimeField
from levelbars.bars import Bar, serialize_barcode
from levelbars.levelset import LevelBarcodes
from levelbars.plcomplex import PLSpace

FIELD_CYCLE = (2, 3, 5)


def corpus_field(index: int) -> int:
    return FIELD_CYCLE[index % len(FIELD_CYCLE)]


@dataclass
class CorpusCase:
    """One space/field pair with lazily computed barcodes."""

    name: str
    space: PLSpace
    characteristic: int

    @cached_property
    def field(self) -> PrimeField:
        return PrimeField(self.characteristic)

    @cached_property
    def level(self) -> LevelBarcodes:
        return levelset.level_barcodes(self.space, self.field)

    @cached_property
    def negated_space(self) -> PLSpace:
        return self.space.negated()

    @cached_property
    def negated_level(self) -> LevelBarcodes:
        return levelset.level_barcodes(self.negated_space, self.field)

    @cached_property
    def sub(self) -> sublevel.SublevelBarcodes:
        return sublevel.sublevel_barcodes(self.space, self.field)

    @cached_property
    def negated_sub(self) -> sublevel.SublevelBarcodes:
        return sublevel.sublevel_barcodes(self.negated_space, self.field)


def fixture_cases() -> list[CorpusCase]:
    from levelbars import fixtures

    return [
        CorpusCase("segment", fixtures.segment(), 2),
        CorpusCase("valley", fixtures.valley(), 2),
        CorpusCase("peak", fixtures.peak(), 3),
        CorpusCase("circle", fixtures.circle(), 2),
    ]


def corpus_cases(count: int = 100, start_seed: int = 0,
                 max_vertices: int | None = None) -> list[CorpusCase]:
    cases = []
    for i in range(count):
        seed = start_seed + i
        spec = oracle.RandomSpaceSpec(seed=seed) if max_vertices is None else \
            oracle.RandomSpaceSpec(seed=seed, max_vertices=max_vertices)
        cases.append(CorpusCase(f"seed-{seed}", oracle.random_space(spec),
                                corpus_field(i)))
    return cases


def check_refinement(case: CorpusCase) -> list[str]:
    """Refined level barcodes must equal directly computed sub-level ones."""
    predicted = dictionary.refine_to_sublevel(case.level)
    problems = []
    if predicted.infinite != case.sub.infinite:
        problems.append(
            f"{case.name}: refined infinite bars {predicted.infinite} != "
            f"computed {case.sub.infinite}")
    if predicted.finite != case.sub.finite:
        problems.append(
            f"{case.name}: refined finite bars {predicted.finite} != "
            f"computed {case.sub.finite}")
    return problems


def check_duality(case: CorpusCase) -> list[str]:
    """Negating the map mirrors the barcode, and the open-closed bars it
    hides reappear as closed-open and finite sub-level bars of the negation."""
    problems = []
    mirrored = dictionary.mirror(case.level)
    if mirrored.by_degree != case.negated_level.by_degree:
        problems.append(
            f"{case.name}: mirror of level barcode does not match the "
            f"barcode of the negated map")
    for degree in sorted(set(case.level.degrees())
                         | set(case.negated_level.degrees())):
        hidden = case.level.open_closed_bars(degree)
        reborn = {dictionary.mirror_bar(bar): m for bar, m in hidden.items()}
        shown = dict(case.negated_level.closed_open_bars(degree))
        if reborn != shown:
            problems.append(
                f"{case.name}: open-closed degree-{degree} bars of f do not "
                f"mirror onto closed-open bars of -f")
        as_finite = {Bar(degree, -bar.right, -bar.left, False, False): m
                     for bar, m in hidden.items()}
        sub_finite = dict(case.negated_sub.finite.get(degree, {}))
        if as_finite != sub_finite:
            problems.append(
                f"{case.name}: open-closed degree-{degree} bars of f do not "
                f"reappear as finite sub-level bars of -f "
                f"({as_finite} vs {sub_finite})")
    return problems


def _sublevel_simplices(space: PLSpace, t: float):
    return [s for s in space.simplices if space.upper_value(s) <= t]


def check_counts(case: CorpusCase) -> list[str]:
    """Theorem-level count identities against the dense oracle."""
    problems = []
    counts = morse.counts_from_barcodes(case.level)
    reference = oracle.betti(case.space.simplices, case.characteristic)
    top = max(len(reference) - 1, max(counts, default=0))
    for r in range(top + 1):
        mine = counts[r].beta if r in counts else 0
        true = reference[r] if r < len(reference) else 0
        if mine != true:
            problems.append(
                f"{case.name}: barcode count beta_{r} = {mine}, oracle says {true}")
    finite = {d: sum(pool.values()) for d, pool in case.sub.finite.items()}
    for r in sorted(set(counts) | set(finite)):
        rho = counts[r].rho if r in counts else 0
        if rho != finite.get(r, 0):
            problems.append(
                f"{case.name}: barcode count rho_{r} = {rho}, sub-level module "
                f"has {finite.get(r, 0)} finite bars")
    thresholds = sorted(set(case.space.values.values()))
    for t in thresholds:
        at = morse.counts_at(case.level, t)
        stage = oracle.betti(_sublevel_simplices(case.space, t),
                             case.characteristic)
        for r in range(max(len(stage) - 1, max(at, default=0)) + 1):
            mine = at[r].beta if r in at else 0
            true = stage[r] if r < len(stage) else 0
            if mine != true:
                problems.append(
                    f"{case.name}: beta_{r}({t}) = {mine} from bars, oracle "
                    f"says {true}")
        for r in at:
            rho_below = at[r - 1].rho if r - 1 in at else 0
            if at[r].c != at[r].beta + at[r].rho + rho_below:
                problems.append(
                    f"{case.name}: c_{r}({t}) violates the Hodge-count identity")
    return problems


def check_zigzag(case: CorpusCase) -> list[str]:
    """Zigzag node dims and arrow ranks against the oracle, the interval
    decomposition contract, and sampling invariance."""
    problems = []
    for degree in range(case.space.dimension + 1):
        module = levelset.build_zigzag(case.space, case.field, degree)
        dims, ranks = oracle.zigzag_profile(case.space, case.characteristic,
                                            degree)
        if module.dims != dims:
            problems.append(
                f"{case.name}: degree-{degree} node dims {module.dims} != "
                f"oracle {dims}")
            continue
        mine = [algebra.rank(arrow.matrix) for arrow in module.arrows]
        if mine != ranks:
            problems.append(
                f"{case.name}: degree-{degree} arrow ranks {mine} != "
                f"oracle {ranks}")
            continue
        intervals = levelset.decompose(module)
        for node in range(len(module.dims)):
            covered = sum(s.multiplicity for s in intervals
                          if s.first <= node <= s.last)
            if covered != module.dims[node]:
                problems.append(
                    f"{case.name}: degree-{degree} node {node} dim "
                    f"{module.dims[node]} but intervals cover {covered}")
        for arrow, true in zip(module.arrows, ranks):
            lo, hi = sorted((arrow.source, arrow.target))
            covered = sum(s.multiplicity for s in intervals
                          if s.first <= lo and hi <= s.last)
            if covered != true:
                problems.append(
                    f"{case.name}: degree-{degree} arrow {arrow.source}->"
                    f"{arrow.target} rank {true} but intervals cover {covered}")
    doubled = levelset.level_barcodes(case.space, case.field, samples_per_gap=2)
    if doubled.by_degree != case.level.by_degree:
        problems.append(
            f"{case.name}: barcode changes under doubled regular-value sampling")
    return problems


def check_reconstruction(case: CorpusCase) -> list[str]:
    """Square-zero, intertwining, and homology dims of the rebuilt complex."""
    problems = []
    rebuilt = morse.reconstruct(case.level, case.field)
    degrees = set()
    for stage in rebuilt.stages:
        degrees.update(stage.degrees())
    top = max(degrees, default=0)
    for t in rebuilt.thresholds:
        at = morse.counts_at(case.level, t)
        for r in range(top + 2):
            square = algebra.compose(rebuilt.boundary_matrix(t, r),
                                     rebuilt.boundary_matrix(t, r + 1))
            if not square.is_zero():
                problems.append(
                    f"{case.name}: boundary squared nonzero at t={t}, "
                    f"degree {r + 1}")
            expect = at[r].beta if r in at else 0
            got = rebuilt.homology_dim(t, r)
            if got != expect:
                problems.append(
                    f"{case.name}: rebuilt homology dim {got} != beta_{r}({t})"
                    f" = {expect}")
    for prev, nxt in zip(rebuilt.thresholds, rebuilt.thresholds[1:]):
        for r in range(1, top + 2):
            before = algebra.compose(rebuilt.inclusion(prev, nxt, r - 1),
                                     rebuilt.boundary_matrix(prev, r))
            after = algebra.compose(rebuilt.boundary_matrix(nxt, r),
                                    rebuilt.inclusion(prev, nxt, r))
            if before != after:
                problems.append(
                    f"{case.name}: inclusion and boundary do not intertwine "
                    f"between t={prev} and t={nxt} in degree {r}")
    return problems


def check_relabeling(case: CorpusCase) -> list[str]:
    """Barcodes and their serialized form ignore vertex identities."""
    ids = case.space.vertex_ids
    rng = random.Random(7919 * len(ids) + sum(ids))
    shuffled = list(ids)
    rng.shuffle(shuffled)
    mapping = {old: 1000 + new for old, new in zip(ids, shuffled)}
    other = levelset.level_barcodes(case.space.relabeled(mapping), case.field)
    if other.by_degree != case.level.by_degree:
        return [f"{case.name}: level barcode changed under vertex relabeling"]
    if serialize_barcode(other.by_degree) != serialize_barcode(case.level.by_degree):
        return [f"{case.name}: serialized barcode changed under relabeling"]
    return []


ALL_CHECKS = {
    "refinement": check_refinement,
    "duality": check_duality,
    "counts": check_counts,
    "zigzag": check_zigzag,
    "reconstruction": check_reconstruction,
    "relabeling": check_relabeling,
}


def run_case(case: CorpusCase, names: tuple[str, ...] | None = None) -> list[str]:
    problems = []
    for name in names or tuple(ALL_CHECKS):
        problems.extend(ALL_CHECKS[name](case))
    return problems


def run_corpus(cases: list[CorpusCase],
               names: tuple[str, ...] | None = None) -> list[str]:
    problems = []
    for case in cases:
        problems.extend(run_case(case, names))
    return problems
