"""Real structures on primary Hopf surfaces.

Classification of Real structures on H_f = (C^2 minus 0)/<f>, constructive
normalization to canonical models, and numerical verification of the
equivariant charts onto S^1 x S^3.
"""
from . import autgroup, contractions, flows, picard, polymap, realstruct, topology
from .contractions import Contraction, classify, is_biholomorphic_pair, structural_flags
from .errors import HopfError
from .polymap import ChainMap, PolyMap, compose, evaluate, invert, maps_equal
from .realstruct import (
    RealStructureSpec,
    canonical_structure,
    existence,
    make_structure,
    normalize_even,
    normalize_odd,
    parity_of_lift,
)
from .topology import build_chart, model_involution, real_locus

__all__ = [
    "autgroup",
    "contractions",
    "flows",
    "picard",
    "polymap",
    "realstruct",
    "topology",
    "ChainMap",
    "Contraction",
    "HopfError",
    "PolyMap",
    "RealStructureSpec",
    "build_chart",
    "canonical_structure",
    "classify",
    "compose",
    "evaluate",
    "existence",
    "invert",
    "is_biholomorphic_pair",
    "make_structure",
    "maps_equal",
    "model_involution",
    "normalize_even",
    "normalize_odd",
    "parity_of_lift",
    "real_locus",
    "structural_flags",
]
