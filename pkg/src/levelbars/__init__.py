"""Level and sub-level persistence barcodes of piecewise linear real- and
angle-valued maps on finite simplicial complexes, with the dictionary from
barcodes to filtered chain complexes and a brute-force homology oracle."""

from levelbars.algebra import PrimeField, SparseMatrix, StructuralError
from levelbars.bars import (CLOSED, CLOSED_OPEN, OPEN, OPEN_CLOSED, Bar,
                            serialize_barcode)
from levelbars.circle import (AngleSpace, QuotientBarcode, StabilizationError,
                              build_cover, load_angle_space, novikov_betti,
                              quotient_barcodes)
from levelbars.dictionary import (ConfigurationMap, LengthSpectrum,
                                  configurations, length_spectrum, mirror,
                                  refine_to_sublevel)
from levelbars.levelset import (IntervalSummand, LevelBarcodes, ZigzagModule,
                                build_zigzag, decompose, level_barcodes)
from levelbars.morse import (ChainComplex, Counts, FilteredHodgeComplex,
                             Generator, HodgeSummary, compare, counts_at,
                             counts_from_barcodes, hodge, load_chain_complex,
                             reconstruct, validate)
from levelbars.plcomplex import (PLSpace, SlicedSpace, ValidationError,
                                 interlevel, level_values, load, slice_space,
                                 sublevel_order)
from levelbars.sublevel import SublevelBarcodes, sublevel_barcodes

__version__ = "0.1.0"

__all__ = [
    "AngleSpace", "Bar", "ChainComplex", "ConfigurationMap", "Counts",
    "FilteredHodgeComplex", "Generator", "HodgeSummary", "IntervalSummand",
    "LengthSpectrum", "LevelBarcodes", "PLSpace", "PrimeField",
    "QuotientBarcode", "SlicedSpace", "SparseMatrix", "StabilizationError",
    "StructuralError", "SublevelBarcodes", "ValidationError", "ZigzagModule",
    "CLOSED", "CLOSED_OPEN", "OPEN", "OPEN_CLOSED",
    "build_cover", "build_zigzag", "compare", "configurations", "counts_at",
    "counts_from_barcodes", "decompose", "hodge", "interlevel",
    "length_spectrum", "level_barcodes", "level_values", "load",
    "load_angle_space", "load_chain_complex", "mirror", "novikov_betti",
    "quotient_barcodes", "reconstruct", "refine_to_sublevel",
    "serialize_barcode", "slice_space", "sublevel_barcodes", "sublevel_order",
    "validate",
]
