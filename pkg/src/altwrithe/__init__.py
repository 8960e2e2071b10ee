"""Writhe-like invariants of reduced alternating link diagrams.

Diagrams are smoothed into Seifert circles; the signed Seifert graph, its
blocks and the locked circle pairs give a profile that is unchanged by
flypes, so two diagrams with different profiles are different links.
"""

from .diagram import (
    Crossing,
    DiagramError,
    OrientedDiagram,
    ParseError,
    ValidationFailed,
    ValidationReport,
    emit_native,
    emit_pd,
    mirror,
    parse_diagram,
    parse_native,
    parse_pd,
    reverse_all,
    reverse_component,
    validate,
)
from .flips import FlipMove, dependent_subgraphs, flip_a, flip_b, flip_c, random_flip_walk
from .graphs import Block, BlockDecomposition, betti, blocks, longest_cycle, two_cuts
from .invariants import InvariantProfile, format_profile, profile, profiles_equal
from .locks import ClusterVector, Lock, Phi, cluster_vector, cyclic_equal, find_locks, phi
from .plats import closed_braid, plat
from .rational import (
    RationalLink,
    eval_continued_fraction,
    four_plat,
    is_strongly_invertible,
    odd_continued_fraction,
    orientation_variants,
)
from .seifert import (
    SeifertCircle,
    SeifertDecomposition,
    SignedGraph,
    homogeneity_check,
    is_reduced,
    seifert_graph,
    smooth,
    to_dot,
)

__all__ = [
    "Block", "BlockDecomposition", "ClusterVector", "Crossing", "DiagramError", "FlipMove",
    "InvariantProfile", "Lock", "OrientedDiagram", "ParseError", "Phi", "RationalLink",
    "SeifertCircle", "SeifertDecomposition", "SignedGraph", "ValidationFailed",
    "ValidationReport", "betti", "blocks", "closed_braid", "cluster_vector", "cyclic_equal",
    "dependent_subgraphs", "emit_native", "emit_pd", "eval_continued_fraction", "find_locks",
    "flip_a", "flip_b", "flip_c", "format_profile", "four_plat", "homogeneity_check",
    "is_reduced", "is_strongly_invertible", "longest_cycle", "mirror", "odd_continued_fraction",
    "orientation_variants", "parse_diagram", "parse_native", "parse_pd", "phi", "plat",
    "profile", "profiles_equal", "random_flip_walk", "reverse_all", "reverse_component",
    "seifert_graph", "smooth", "to_dot", "two_cuts", "validate",
]
