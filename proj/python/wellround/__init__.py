"""Well-rounded sublattices of planar lattices."""

from ._wellround import (
    WellroundError,
    a_hex,
    a_square,
    b_hex,
    b_square,
    census,
    classify,
    constants,
    count_well_rounded,
    epstein,
    existence,
    frames,
    reduce,
)

__all__ = [
    "WellroundError",
    "a_hex",
    "a_square",
    "b_hex",
    "b_square",
    "census",
    "classify",
    "constants",
    "count_well_rounded",
    "epstein",
    "existence",
    "frames",
    "reduce",
]
