"""Numerical semigroup rings, radical chains and resolutions over their endomorphism orders."""
from .chains import RadicalChain, greedy_chain, lazy_chain, validate_chain
from .field import QQ, PrimeField
from .homology import (
    Resolution, TruncationContext, check_complex, global_dimension, projective_dimension,
    resolve_simple,
)
from .ideals import RelativeIdeal, colon, maximal_ideal
from .order import EndomorphismOrder, build_order, ceil_order
from .semigroup import NumericalSemigroup, family_ring

__version__ = "0.1.0"

__all__ = [
    "EndomorphismOrder", "NumericalSemigroup", "PrimeField", "QQ", "RadicalChain", "RelativeIdeal",
    "Resolution", "TruncationContext", "build_order", "ceil_order", "check_complex", "colon",
    "family_ring", "global_dimension", "greedy_chain", "lazy_chain", "maximal_ideal",
    "projective_dimension", "resolve_simple", "validate_chain",
]
