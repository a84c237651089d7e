"""Recognition, reductions and canonical forms for chordal line graphs."""
from .canon import CanonicalForm, ChordalLineCanonizer, TripleNode, canon, canon_connected, canon_pointed
from .chordal import good_tree_decomposition, is_chordal, maximal_cliques_chordal, validate_tree_decomposition
from .errors import GraphError
from .graph import Graph, LabeledGraph, apply_permutation, parse_graph, relabel, serialize_graph
from .isocheck import are_isomorphic, brute_canonical, color_refinement
from .linegraph import is_chordal_line, is_line_graph, line_graph, root_graph
from .reductions import hat, is_hat, unhat

__all__ = [
    "CanonicalForm",
    "ChordalLineCanonizer",
    "TripleNode",
    "canon",
    "canon_connected",
    "canon_pointed",
    "good_tree_decomposition",
    "is_chordal",
    "maximal_cliques_chordal",
    "validate_tree_decomposition",
    "GraphError",
    "Graph",
    "LabeledGraph",
    "apply_permutation",
    "parse_graph",
    "relabel",
    "serialize_graph",
    "are_isomorphic",
    "brute_canonical",
    "color_refinement",
    "is_chordal_line",
    "is_line_graph",
    "line_graph",
    "root_graph",
    "hat",
    "is_hat",
    "unhat",
]
