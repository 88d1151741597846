"""Exact Cartesian differential categories over polynomial maps.

The pieces, bottom up: coefficient semirings, the polynomial category and its
differential combinator, higher derivatives, the Faà di Bruno construction,
the Δ-construction, the ultrametric on sequences and a seeded law checker.
"""
from .semiring import Semiring, parse_semiring, NAT, INT, RAT, modp
from .polycat import (
    Poly, PolyMap, ParseError, ArityError, compose, identity, projection, select, pair, add,
    scale, zero, diff, is_d_linear, is_d_constant, is_k_linear, parse_polymap, format_polymap,
)
from .partitions import SetPartition, enumerate_partitions, bell, block_projection
from .derivative import partial_in_slot, partial_n, total_n, zero_injection, linearize
from .faa import (
    FaaSeq, FaaValidationError, faa_compose, faa_identity, faa_projection, faa_pair, faa_add,
    faa_scale, faa_zero, faa_diff, lift, functor_E, constant_unit, is_d_constant_seq,
    homogeneous_embed, decompose, monad_mult,
)
from .delta import DeltaMap, delta_compose, delta_diff, delta_lift
from .ultrametric import Distance, distance, cauchy_stabilization

__version__ = "0.1.0"
