"""Hecke-Kiselman monoids of mixed graphs.

Build a graph with :class:`MixedGraph`, then :func:`hk_monoid` completes its
presentation and enumerates the monoid when it is finite.
"""

from .mixedgraph import MixedGraph, canonical_form, classify_shape, enumerate_mixed_graphs, linear_path, parse_graph
from .monoid import FiniteMonoid, idempotents, irreducible_generators, is_j_trivial
from .rewrite import EnumerationResult, hk_monoid, kb_complete, presentation_of
from .heckea import enumerate_hecke, kiselman_quotient
from .combinat import catalan

__all__ = [
    "EnumerationResult",
    "FiniteMonoid",
    "MixedGraph",
    "canonical_form",
    "catalan",
    "classify_shape",
    "enumerate_hecke",
    "enumerate_mixed_graphs",
    "hk_monoid",
    "idempotents",
    "irreducible_generators",
    "is_j_trivial",
    "kb_complete",
    "kiselman_quotient",
    "linear_path",
    "parse_graph",
    "presentation_of",
]
