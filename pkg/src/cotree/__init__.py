"""Spanning trees of 3-connected plane graphs whose co-trees also have small degree.

The pipeline computes a canonical ordering of a rooted plane graph, the
matching ordering of its dual, Barnette's spanning 3-tree, and a spanning
tree whose co-tree in the dual has maximum degree at most 5 along with it.
"""

__version__ = "0.1.0"

from .canonical import (
    CHAIN_RULES,
    LABELS,
    CanonicalOrdering,
    EdgeAnnotation,
    annotate,
    compute_canonical_ordering,
    validate_canonical_ordering,
)
from .dual_order import DualCanonicalOrdering, dual_canonical_ordering, verify_label_correspondence
from .errors import CotreeError
from .generators import generate
from .planar import PlanarGraph, build_graph, dual, from_faces, is_three_connected, load_graph
from .report import Finding, ValidationReport
from .trees import (
    FiveTreeResult,
    SpanningTreePair,
    barnette_tree,
    constrained_barnette,
    five_tree,
    five_tree_pipeline,
    h_edges,
    tree_to_walk,
)

__all__ = [
    "CHAIN_RULES",
    "LABELS",
    "CanonicalOrdering",
    "CotreeError",
    "DualCanonicalOrdering",
    "EdgeAnnotation",
    "Finding",
    "FiveTreeResult",
    "PlanarGraph",
    "SpanningTreePair",
    "ValidationReport",
    "annotate",
    "barnette_tree",
    "build_graph",
    "compute_canonical_ordering",
    "constrained_barnette",
    "dual",
    "dual_canonical_ordering",
    "five_tree",
    "five_tree_pipeline",
    "from_faces",
    "generate",
    "h_edges",
    "is_three_connected",
    "load_graph",
    "tree_to_walk",
    "validate_canonical_ordering",
    "verify_label_correspondence",
]
