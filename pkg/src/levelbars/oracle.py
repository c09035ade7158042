"""Brute-force ground truth, deliberately separate from the sparse engine.

Dense Gaussian elimination over F_p, Betti numbers of face-closed complexes,
zigzag node/arrow profiles computed from explicit cycle bases, and seeded
random test inputs.  Nothing here reuses the column-reduction code in
``algebra``; agreement between the two code paths is what the property and
acceptance suites certify.
"""

from __future__ import annotations

from dataclasses import dataclass
from random import Random
from typing import Iterable, Sequence

import numpy as np

from levelbars import plcomplex
from levelbars.plcomplex import PLSpace, Simplex


# ---------------------------------------------------------------------------
# dense elimination

def dense_rank(mat: np.ndarray | Sequence[Sequence[int]], p: int) -> int:
    a = np.array(mat, dtype=np.int64) % p
    if a.size == 0:
        return 0
    m, n = a.shape
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, m):
            if a[i, c]:
                piv = i
                break
        if piv is None:
            continue
        a[[r, piv]] = a[[piv, r]]
        a[r] = (a[r] * pow(int(a[r, c]), -1, p)) % p
        for i in range(m):
            if i != r and a[i, c]:
                a[i] = (a[i] - a[i, c] * a[r]) % p
        r += 1
        if r == m:
            break
    return r


def dense_nullspace(mat: np.ndarray | Sequence[Sequence[int]], p: int) -> np.ndarray:
    """Kernel basis as columns of an (n, k) array over 0..p-1."""
    a = np.array(mat, dtype=np.int64) % p
    if a.size == 0:
        n = a.shape[1] if a.ndim == 2 else 0
        return np.eye(n, dtype=np.int64)
    m, n = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, m):
            if a[i, c]:
                piv = i
                break
        if piv is None:
            continue
        a[[r, piv]] = a[[piv, r]]
        a[r] = (a[r] * pow(int(a[r, c]), -1, p)) % p
        for i in range(m):
            if i != r and a[i, c]:
                a[i] = (a[i] - a[i, c] * a[r]) % p
        pivots.append(c)
        r += 1
        if r == m:
            break
    free = [c for c in range(n) if c not in pivots]
    basis = np.zeros((n, len(free)), dtype=np.int64)
    for k, c in enumerate(free):
        basis[c, k] = 1
        for row, pc in enumerate(pivots):
            basis[pc, k] = (-a[row, c]) % p
    return basis


# ---------------------------------------------------------------------------
# simplicial homology

def _check_closed(simplices: Iterable[Simplex]) -> list[Simplex]:
    cells = sorted(set(tuple(s) for s in simplices), key=lambda s: (len(s), s))
    have = set(cells)
    for s in cells:
        for i in range(len(s)):
            face = s[:i] + s[i + 1:]
            if face and face not in have:
                raise ValueError(f"complex not closed under faces: missing {face}")
    return cells


def dense_boundaries(simplices: Iterable[Simplex], p: int) -> dict[int, np.ndarray]:
    """Dense boundary matrices per degree; rows index faces, columns cells."""
    cells = _check_closed(simplices)
    by_dim: dict[int, list[Simplex]] = {}
    for s in cells:
        by_dim.setdefault(len(s) - 1, []).append(s)
    index = {d: {s: i for i, s in enumerate(lst)} for d, lst in by_dim.items()}
    mats: dict[int, np.ndarray] = {}
    for d, lst in by_dim.items():
        if d == 0:
            continue
        mat = np.zeros((len(by_dim[d - 1]), len(lst)), dtype=np.int64)
        for j, s in enumerate(lst):
            sign = 1
            for i in range(len(s)):
                face = s[:i] + s[i + 1:]
                mat[index[d - 1][face], j] = sign % p
                sign = -sign
        mats[d] = mat
    return mats


def betti(simplices: Iterable[Simplex], p: int) -> list[int]:
    """Betti numbers over F_p as dim ker - dim im, degrees 0..top."""
    cells = _check_closed(simplices)
    if not cells:
        return []
    top = max(len(s) - 1 for s in cells)
    counts = [sum(1 for s in cells if len(s) - 1 == d) for d in range(top + 1)]
    mats = dense_boundaries(cells, p)
    out = []
    for d in range(top + 1):
        rank_d = dense_rank(mats[d], p) if d in mats else 0
        rank_up = dense_rank(mats[d + 1], p) if d + 1 in mats else 0
        out.append(counts[d] - rank_d - rank_up)
    return out


def _degree_chain(simplices: Sequence[Simplex], degree: int) -> list[Simplex]:
    return sorted((s for s in simplices if len(s) == degree + 1))


def _dense_boundary_for(cells: Sequence[Simplex], below: Sequence[Simplex], p: int) -> np.ndarray:
    idx = {s: i for i, s in enumerate(below)}
    mat = np.zeros((len(below), len(cells)), dtype=np.int64)
    for j, s in enumerate(cells):
        sign = 1
        for i in range(len(s)):
            face = s[:i] + s[i + 1:]
            if face:
                mat[idx[face], j] = sign % p
            sign = -sign
    return mat


def zigzag_profile(space: PLSpace, p: int, degree: int,
                   samples_per_gap: int = 1) -> tuple[list[int], list[int]]:
    """Node homology dimensions and inclusion-arrow ranks of the levelset
    zigzag, computed densely and without any interval decomposition.

    The arrow rank is dim((Z_r(L) + B_r(I)) / B_r(I)): boundaries of the
    source land inside boundaries of the target, so the whole cycle space of
    the source can stand in for its homology representatives.
    """
    from levelbars.levelset import zigzag_layout

    _, nodes = zigzag_layout(space, samples_per_gap=samples_per_gap)
    cache = []
    for node in nodes:
        cells = _degree_chain(node.simplices, degree)
        below = _degree_chain(node.simplices, degree - 1) if degree > 0 else []
        above = _degree_chain(node.simplices, degree + 1)
        bnd = _dense_boundary_for(cells, below, p) if degree > 0 else \
            np.zeros((0, len(cells)), dtype=np.int64)
        cycles = dense_nullspace(bnd, p) if len(cells) else np.zeros((0, 0), dtype=np.int64)
        bdries = _dense_boundary_for(above, cells, p)
        cache.append((cells, cycles, bdries))
    dims = []
    for cells, cycles, bdries in cache:
        dims.append(cycles.shape[1] - dense_rank(bdries, p))
    ranks = []
    for k, node in enumerate(nodes):
        if node.kind != "level":
            continue
        for target in (k - 1, k + 1):
            s_cells, s_cycles, _ = cache[k]
            t_cells, _, t_bdries = cache[target]
            t_index = {s: i for i, s in enumerate(t_cells)}
            lifted = np.zeros((len(t_cells), s_cycles.shape[1]), dtype=np.int64)
            for i, s in enumerate(s_cells):
                lifted[t_index[s], :] = s_cycles[i, :]
            joint = np.hstack([t_bdries, lifted])
            ranks.append(dense_rank(joint, p) - dense_rank(t_bdries, p))
    return dims, ranks


# ---------------------------------------------------------------------------
# random inputs

@dataclass(frozen=True)
class RandomSpaceSpec:
    """Deterministic recipe for a small random PL space.

    Values are small integers so ties across vertices are common and all
    comparisons stay exact.
    """

    seed: int
    min_vertices: int = 4
    max_vertices: int = 9
    top_dim: int = 2
    edge_density: float = 0.45
    triangle_density: float = 0.35
    value_range: int = 3


def random_space_document(spec: RandomSpaceSpec) -> dict:
    """JSON-ready document; byte-identical for equal specs."""
    rng = Random(spec.seed)
    n = rng.randint(spec.min_vertices, spec.max_vertices)
    vertices = [{"id": v, "value": rng.randint(0, spec.value_range)}
                for v in range(n)]
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < spec.edge_density:
                edges.append((u, v))
    present = set(edges)
    triangles = []
    if spec.top_dim >= 2:
        for u in range(n):
            for v in range(u + 1, n):
                for w in range(v + 1, n):
                    if ((u, v) in present and (u, w) in present and (v, w) in present
                            and rng.random() < spec.triangle_density):
                        triangles.append((u, v, w))
    simplices = [[v] for v in range(n)]
    simplices.extend(list(e) for e in edges)
    simplices.extend(list(t) for t in triangles)
    return {"field": 2, "vertices": vertices, "simplices": simplices}


def random_space(spec: RandomSpaceSpec) -> PLSpace:
    return plcomplex.load(random_space_document(spec))


def random_chain_complex(seed: int, p: int):
    """A validated random chain complex: random boundaries post-processed so
    each one factors through the previous kernel, with generator values
    stratified by degree to keep every nonzero entry value-decreasing."""
    from levelbars.algebra import PrimeField, SparseMatrix
    from levelbars.morse import ChainComplex, Generator

    rng = Random(seed)
    field = PrimeField(p)
    dims = [rng.randint(1, 4), rng.randint(0, 4), rng.randint(0, 4), rng.randint(0, 3)]
    while len(dims) > 1 and dims[-1] == 0:
        dims.pop()
    generators = {
        r: tuple(Generator(r, float(3 * r + rng.randint(0, 2)), f"g{r}.{i}")
                 for i in range(c))
        for r, c in enumerate(dims)
    }
    boundaries: dict[int, SparseMatrix] = {}
    prev = None  # dense boundary one degree down
    for r in range(1, len(dims)):
        rows, cols = dims[r - 1], dims[r]
        if prev is None:
            mat = np.array([[rng.randrange(p) for _ in range(cols)]
                            for _ in range(rows)], dtype=np.int64)
        else:
            null = dense_nullspace(prev, p)
            coeff = np.array([[rng.randrange(p) for _ in range(cols)]
                              for _ in range(null.shape[1])], dtype=np.int64)
            mat = (null @ coeff) % p if null.size else np.zeros((rows, cols), dtype=np.int64)
        prev = mat
        # from_dense cannot see the column count of a zero-row matrix, so
        # hand the shape over explicitly.
        entries = [(i, j, int(mat[i, j])) for i in range(rows)
                   for j in range(cols) if mat[i, j] % p]
        boundaries[r] = SparseMatrix.from_entries(rows, cols, entries, field)
    return ChainComplex(field=field, generators=generators, boundaries=boundaries)
