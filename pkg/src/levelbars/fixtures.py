"""Small named spaces, maps, and chain complexes used across the test suite
and the self-check command.

Each fixture comes in document form (the JSON input schema) and loaded form.
The values are chosen so every barcode can be read off by hand: a segment, a
four-vertex circle with a value plateau, a valley and its upside-down peak,
a two-cell sphere chain complex, and two angle-valued maps (a degree-one
circle map and its disjoint union with a null-homotopic valley).
"""

from __future__ import annotations

import math

from levelbars.algebra import PrimeField
from levelbars.circle import AngleSpace, load_angle_space
from levelbars.morse import ChainComplex, load_chain_complex
from levelbars.plcomplex import PLSpace, load


def segment_document() -> dict:
    return {
        "field": 2,
        "vertices": [{"id": 0, "value": 0.0}, {"id": 1, "value": 1.0}],
        "simplices": [[0], [1], [0, 1]],
    }


def segment() -> PLSpace:
    return load(segment_document())


def circle_document() -> dict:
    """Four-vertex cycle with values 0, 1, 2, 1: one min, one max, and a
    level-1 plateau crossing both arcs."""
    return {
        "field": 2,
        "vertices": [
            {"id": 0, "value": 0.0},
            {"id": 1, "value": 1.0},
            {"id": 2, "value": 2.0},
            {"id": 3, "value": 1.0},
        ],
        "simplices": [[0, 1], [1, 2], [2, 3], [0, 3]],
    }


def circle() -> PLSpace:
    return load(circle_document())


def valley_document() -> dict:
    """Path a - c - b with the middle vertex lowest (values 1, 0, 1)."""
    return {
        "field": 2,
        "vertices": [
            {"id": 0, "value": 1.0},
            {"id": 1, "value": 0.0},
            {"id": 2, "value": 1.0},
        ],
        "simplices": [[0, 1], [1, 2]],
    }


def valley() -> PLSpace:
    return load(valley_document())


def peak_document() -> dict:
    """The valley upside down: path with middle vertex highest (-1, 0, -1)."""
    return {
        "field": 2,
        "vertices": [
            {"id": 0, "value": -1.0},
            {"id": 1, "value": 0.0},
            {"id": 2, "value": -1.0},
        ],
        "simplices": [[0, 1], [1, 2]],
    }


def peak() -> PLSpace:
    return load(peak_document())


def sphere_chain_document() -> dict:
    """Minimum, one saddle, two maxima on a 2-sphere: the boundary of both
    top cells hits the saddle, with opposite signs."""
    return {
        "field": 2,
        "generators": [
            {"degree": 0, "value": 0.0, "name": "m"},
            {"degree": 1, "value": 1.0, "name": "s"},
            {"degree": 2, "value": 2.0, "name": "A"},
            {"degree": 2, "value": 3.0, "name": "B"},
        ],
        "boundaries": {"2": [[0, 0, 1], [0, 1, -1]]},
    }


def sphere_chain(field: PrimeField | None = None) -> ChainComplex:
    return load_chain_complex(sphere_chain_document(), field or PrimeField(2))


def circle_chain_document() -> dict:
    """Height function on a circle: one minimum, one maximum, zero boundary."""
    return {
        "field": 2,
        "generators": [
            {"degree": 0, "value": 0.0, "name": "min"},
            {"degree": 1, "value": 2.0, "name": "max"},
        ],
        "boundaries": {},
    }


def circle_chain(field: PrimeField | None = None) -> ChainComplex:
    return load_chain_complex(circle_chain_document(), field or PrimeField(2))


def peak_chain_document() -> dict:
    """Morse data of the peak path: two minima at -1 joined through the
    maximum at 0."""
    return {
        "field": 3,
        "generators": [
            {"degree": 0, "value": -1.0, "name": "left"},
            {"degree": 0, "value": -1.0, "name": "right"},
            {"degree": 1, "value": 0.0, "name": "top"},
        ],
        "boundaries": {"1": [[0, 0, 1], [1, 0, -1]]},
    }


def peak_chain(field: PrimeField | None = None) -> ChainComplex:
    return load_chain_complex(peak_chain_document(), field or PrimeField(3))


def circle_map_document() -> dict:
    """Degree-one map from a triangle circle to the circle: three vertices
    at thirds of a turn, with the closing edge winding once."""
    return {
        "field": 2,
        "vertices": [
            {"id": 0, "angle": 0.0},
            {"id": 1, "angle": 2.0 * math.pi / 3.0},
            {"id": 2, "angle": 4.0 * math.pi / 3.0},
        ],
        "simplices": [[0, 1], [1, 2], [0, 2]],
        "windings": [{"edge": [2, 0], "w": 1}],
    }


def circle_map() -> AngleSpace:
    return load_angle_space(circle_map_document())


def circle_map_with_valley_document() -> dict:
    """The degree-one circle map plus a disjoint null-homotopic valley
    component (angles 1.5, 0.5, 1.5, all windings zero)."""
    base = circle_map_document()
    base["vertices"] += [
        {"id": 3, "angle": 1.5},
        {"id": 4, "angle": 0.5},
        {"id": 5, "angle": 1.5},
    ]
    base["simplices"] += [[3, 4], [4, 5]]
    return base


def circle_map_with_valley() -> AngleSpace:
    return load_angle_space(circle_map_with_valley_document())
