"""Construct highly edge-connected regular multigraphs that lack disjoint
perfect matchings, and certify their properties by exact computation."""

from .constructions import (
    ConstructionError, HVariant, build_H, build_P, build_Q, build_S, build_T, counterexample, pm_family_N,
)
from .cuts import edge_connectivity, gomory_hu, is_r_graph, min_odd_cut, stoer_wagner
from .graph import GraphError, Multigraph, add_matchings, boundary, delete_edges, edge_multiset_equal, is_regular
from .io import ParseError, parse, serialize
from .matching import Verdict, enumerate_perfect_matchings, find_perfect_matching, has_disjoint_pms
from .meredith import meredith_extend, meredith_simple, min_vertex_cover

__version__ = "0.1.0"
