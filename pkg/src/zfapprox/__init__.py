"""Zero forcing sets with matching fort packings, via path decompositions.

Given a graph and a path decomposition of width ``w``, the solver returns a
zero forcing set ``S`` and disjoint forts ``F`` with ``|S| <= (w + 1)|F|``,
which brackets the zero forcing number between ``|F|`` and ``|S|``.
"""
from .approx import (ApproxResult, FortPacking, VerificationReport, approximate_zero_forcing,
                     ratio_certificate, solve_components, verify_result)
from .arcs import (ArcSet, ChainTwist, find_chain_twist, is_forcing_arc_set, merge_via_cut,
                   satisfies_p1, sinks, sources)
from .decomposition import (DecompositionError, NicePathDecomposition, PathDecomposition,
                            exact_pathwidth, make_nice, parse_decomposition)
from .forcing import canonical_fas, closure, is_zero_forcing_set, white_set
from .graph import Graph, ParseError, parse_graph, serialize_graph

__all__ = [
    "ApproxResult", "ArcSet", "ChainTwist", "DecompositionError", "FortPacking", "Graph",
    "NicePathDecomposition", "ParseError", "PathDecomposition", "VerificationReport",
    "approximate_zero_forcing", "canonical_fas", "closure", "exact_pathwidth", "find_chain_twist",
    "is_forcing_arc_set", "is_zero_forcing_set", "make_nice", "merge_via_cut", "parse_decomposition",
    "parse_graph", "ratio_certificate", "satisfies_p1", "serialize_graph", "sinks",
    "solve_components", "sources", "verify_result", "white_set",
]
