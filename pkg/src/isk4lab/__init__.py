"""Structure of triangle-free graphs with no induced subdivision of K4:
recognition, decompositions, degree-2 vertices and colorings, checked by
exhaustive search over small graphs."""

__version__ = "0.1.0"

from .graph import Graph, Hole, connectivity, enumerate_holes, girth, triangle_witness
from .recognition import (
    BudgetExceeded,
    chordless_status,
    contains_isk4,
    contains_k33,
    contains_prism,
    is_series_parallel,
    multipartite_class,
)
from .cutsets import (
    find_clique_cutset,
    find_double_star_cutset,
    find_proper_two_cutset,
    find_star_cutset,
    verify_separation,
)
from .wheels import OutOfClass, TheoremViolation, decompose, enumerate_wheels
from .degree2 import three_color, verify_coloring, xy_property
from .formats import decode_graph6, encode_graph6, parse_edgelist

__all__ = [
    "Graph", "Hole", "connectivity", "enumerate_holes", "girth", "triangle_witness",
    "BudgetExceeded", "chordless_status", "contains_isk4", "contains_k33", "contains_prism",
    "is_series_parallel", "multipartite_class",
    "find_clique_cutset", "find_double_star_cutset", "find_proper_two_cutset", "find_star_cutset",
    "verify_separation",
    "OutOfClass", "TheoremViolation", "decompose", "enumerate_wheels",
    "three_color", "verify_coloring", "xy_property",
    "decode_graph6", "encode_graph6", "parse_edgelist",
]
