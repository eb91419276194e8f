"""Spanning trees of host graphs and the quantities defined on them."""

from src.tree.metrics import (
    cotree_edges,
    edge_congestion,
    fundamental_cut,
    fundamental_cycle,
    fundamental_cycles,
    incidence_counts,
    max_congestion,
    max_stretch,
    stretch_histogram,
    successor,
    tree_diameter,
)
from src.tree.sampling import random_spanning_tree, sample_spanning_trees
from src.tree.serialization import tree_from_json, tree_to_json
from src.tree.spanning_tree import (
    SpanningTree,
    TreeError,
    build_tree,
    check_spans,
    detour_path,
    reroot,
    tree_distance,
)
from src.tree.types import CongestionReport, StretchReport
