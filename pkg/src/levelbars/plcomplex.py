"""Finite simplicial complexes carrying a piecewise-linear real-valued map.

A PLSpace is a face-closed set of simplices over integer vertex ids, plus one
real value per vertex; the map extends linearly over each simplex.  Slicing
refines the complex by stellar edge subdivision until every prescribed level
has a subcomplex preimage, which is what makes level and interlevel homology
computable simplicially downstream.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping

Simplex = tuple[int, ...]

DEFAULT_MAX_DIM = 3


class ValidationError(ValueError):
    """Raised for documents or arguments violating the input contracts."""


def boundary_faces(simplex: Simplex) -> list[tuple[Simplex, int]]:
    """Codimension-one faces with alternating signs, vertices kept sorted.

    Vertices have no faces here: homology is non-reduced throughout."""
    if len(simplex) <= 1:
        return []
    faces = []
    for i in range(len(simplex)):
        face = simplex[:i] + simplex[i + 1:]
        sign = 1 if i % 2 == 0 else -1
        faces.append((face, sign))
    return faces


def _close_under_faces(simplices: Iterable[Simplex]) -> set[Simplex]:
    closed: set[Simplex] = set()
    for simplex in simplices:
        for k in range(1, len(simplex) + 1):
            closed.update(combinations(simplex, k))
    return closed


@dataclass(frozen=True)
class PLSpace:
    """values maps vertex id -> map value; simplices are sorted id tuples,
    listed in (dimension, lexicographic) order and closed under faces."""

    values: Mapping[int, float]
    simplices: tuple[Simplex, ...]

    @classmethod
    def build(cls, values: Mapping[int, float], simplices: Iterable[Simplex],
              max_dim: int = DEFAULT_MAX_DIM) -> "PLSpace":
        vals = {int(v): float(x) for v, x in values.items()}
        for v, x in vals.items():
            if not math.isfinite(x):
                raise ValidationError(f"vertex {v}: value must be finite")
        raw: set[Simplex] = set()
        for simplex in simplices:
            verts = tuple(sorted(int(v) for v in simplex))
            if not verts:
                raise ValidationError("empty simplex")
            if len(set(verts)) != len(verts):
                raise ValidationError(f"simplex {list(simplex)}: repeated vertex")
            if len(verts) - 1 > max_dim:
                raise ValidationError(
                    f"simplex {list(simplex)}: dimension {len(verts) - 1} "
                    f"exceeds maximum {max_dim}")
            for v in verts:
                if v not in vals:
                    raise ValidationError(
                        f"simplex {list(simplex)}: unknown vertex {v}")
            raw.add(verts)
        raw.update((v,) for v in vals)
        closed = _close_under_faces(raw)
        ordered = tuple(sorted(closed, key=lambda s: (len(s), s)))
        return cls(vals, ordered)

    @property
    def dimension(self) -> int:
        return max((len(s) - 1 for s in self.simplices), default=-1)

    @property
    def vertex_ids(self) -> list[int]:
        return sorted(self.values)

    def upper_value(self, simplex: Simplex) -> float:
        return max(self.values[v] for v in simplex)

    def simplices_of_dim(self, dim: int) -> list[Simplex]:
        return [s for s in self.simplices if len(s) == dim + 1]

    def negated(self) -> "PLSpace":
        return PLSpace({v: -x for v, x in self.values.items()}, self.simplices)

    def shifted(self, delta: float) -> "PLSpace":
        return PLSpace({v: x + delta for v, x in self.values.items()}, self.simplices)

    def relabeled(self, mapping: Mapping[int, int]) -> "PLSpace":
        if sorted(mapping) != self.vertex_ids or len(set(mapping.values())) != len(mapping):
            raise ValidationError("relabeling must be a bijection on vertex ids")
        values = {mapping[v]: x for v, x in self.values.items()}
        simplices = [tuple(sorted(mapping[v] for v in s)) for s in self.simplices]
        return PLSpace(values, tuple(sorted(simplices, key=lambda s: (len(s), s))))

    def restricted(self, keep: Iterable[Simplex]) -> "PLSpace":
        """Subcomplex on a face-closed simplex subset."""
        kept = tuple(sorted(set(keep), key=lambda s: (len(s), s)))
        verts = {v for s in kept for v in s}
        return PLSpace({v: self.values[v] for v in verts}, kept)


def load(document: object, max_dim: int = DEFAULT_MAX_DIM) -> PLSpace:
    """Parse and validate the JSON input schema for real-valued spaces.

    The document must carry a non-empty ``vertices`` list of {id, value}
    objects and a non-empty ``simplices`` list of vertex-id lists; faces are
    completed automatically and every declared vertex joins as a 0-simplex.
    """
    if not isinstance(document, dict):
        raise ValidationError("document must be a JSON object")
    vertices = document.get("vertices")
    if not isinstance(vertices, list) or not vertices:
        raise ValidationError("'vertices' must be a non-empty list")
    values: dict[int, float] = {}
    for i, entry in enumerate(vertices):
        if not isinstance(entry, dict) or "id" not in entry or "value" not in entry:
            raise ValidationError(f"vertices[{i}]: expected an object with id and value")
        vid = entry["id"]
        if not isinstance(vid, int) or isinstance(vid, bool):
            raise ValidationError(f"vertices[{i}]: id must be an integer")
        if vid in values:
            raise ValidationError(f"duplicate vertex id {vid}")
        val = entry["value"]
        if not isinstance(val, (int, float)) or isinstance(val, bool) or not math.isfinite(val):
            raise ValidationError(f"vertex {vid}: value must be a finite number")
        values[vid] = float(val)
    simplices = document.get("simplices")
    if not isinstance(simplices, list) or not simplices:
        raise ValidationError("'simplices' must be a non-empty list")
    for i, simplex in enumerate(simplices):
        if not isinstance(simplex, list) or not simplex:
            raise ValidationError(f"simplices[{i}]: expected a non-empty list of vertex ids")
        for v in simplex:
            if not isinstance(v, int) or isinstance(v, bool):
                raise ValidationError(f"simplices[{i}]: vertex ids must be integers")
    return PLSpace.build(values, [tuple(s) for s in simplices], max_dim=max_dim)


def level_values(space: PLSpace) -> list[float]:
    """Sorted distinct vertex values; the candidate critical values."""
    if not space.values:
        raise ValidationError("empty complex has no level values")
    return sorted(set(space.values.values()))


@dataclass(frozen=True)
class SlicedSpace:
    """A PLSpace refined so each level in ``levels`` has a subcomplex
    preimage, with bookkeeping from cut vertices back to the edge and level
    that produced them."""

    space: PLSpace
    levels: tuple[float, ...]
    cut_vertices: Mapping[int, tuple[tuple[int, int], float]]

    @property
    def min_value(self) -> float:
        return min(self.space.values.values())

    @property
    def max_value(self) -> float:
        return max(self.space.values.values())


def slice_space(space: PLSpace, levels: Iterable[float]) -> SlicedSpace:
    """Refine so each level's preimage is a full subcomplex.

    Works one level at a time in increasing order.  Every edge whose endpoint
    values strictly straddle the level is stellarly subdivided at a fresh
    vertex carrying exactly that level value; a split never creates another
    edge straddling the current or any smaller level, so the loop terminates
    with every simplex on one side of every processed level.
    """
    lvls = [float(t) for t in levels]
    if sorted(set(lvls)) != lvls:
        raise ValidationError("levels must be strictly increasing")
    for t in lvls:
        if not math.isfinite(t):
            raise ValidationError("levels must be finite")
    if not space.simplices:
        raise ValidationError("cannot slice an empty complex")
    values = dict(space.values)
    simp = set(space.simplices)
    next_id = max(values) + 1
    cuts: dict[int, tuple[tuple[int, int], float]] = {}
    for t in lvls:
        crossing = sorted(
            s for s in simp
            if len(s) == 2 and min(values[v] for v in s) < t < max(values[v] for v in s))
        for u, v in crossing:
            mid = next_id
            next_id += 1
            values[mid] = t
            cuts[mid] = ((u, v), t)
            affected = [s for s in simp if u in s and v in s]
            for s in affected:
                simp.remove(s)
                rest = tuple(x for x in s if x != u and x != v)
                simp.add(tuple(sorted(rest + (u, mid))))
                simp.add(tuple(sorted(rest + (mid, v))))
                simp.add(tuple(sorted(rest + (mid,))))
    refined = PLSpace(values, tuple(sorted(simp, key=lambda s: (len(s), s))))
    return SlicedSpace(refined, tuple(lvls), cuts)


def _endpoint_ok(sliced: SlicedSpace, x: float) -> bool:
    # Endpoints beyond the value range impose no constraint, so the preimage
    # is a subcomplex without any cut there.
    return x in sliced.levels or x <= sliced.min_value or x >= sliced.max_value


def interlevel(sliced: SlicedSpace, a: float, b: float) -> PLSpace:
    """Full subcomplex with all vertex values in [a, b].

    Both endpoints must be sliced levels or lie outside the value range;
    otherwise the set selected here would not equal the preimage.
    """
    if a > b:
        raise ValidationError(f"interlevel bounds out of order: {a} > {b}")
    for x in (a, b):
        if not _endpoint_ok(sliced, x):
            raise ValidationError(f"{x} is not a sliced level")
    space = sliced.space
    keep = [s for s in space.simplices
            if all(a <= space.values[v] <= b for v in s)]
    return space.restricted(keep)


def sublevel_order(space: PLSpace) -> list[Simplex]:
    """Total order by (max vertex value, dimension, id-lexicographic).

    Every prefix is a subcomplex: faces have no larger maximum value and a
    strictly smaller dimension.
    """
    return sorted(space.simplices,
                  key=lambda s: (space.upper_value(s), len(s), s))
