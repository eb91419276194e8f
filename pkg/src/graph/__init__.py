"""
Graph core: Cartesian products of K_n / P_n factors, explicit edge-list graphs,
the mixed-radix vertex codec, antipodal vertices and grid boundary paths.
"""

from src.graph.boundary import BoundaryPath, antipodal_boundary_path, boundary_path, boundary_paths, standard_form_pair
from src.graph.edge_list import EdgeListGraph, make_edge_list_graph
from src.graph.factor_spec import FactorSpecError, graph_for_family, graph_from_spec, parse_dims, parse_factor_spec
from src.graph.host import HostGraph, bfs_distances, graph_distance, is_connected
from src.graph.product import ProductGraph, coord_codec, grid_graph, hamming_graph, make_product_graph
from src.graph.serialization import graph_from_json, graph_to_json
from src.graph.types import Edge, FactorKind, FactorSpec, Family, GraphError, VertexId, canonical_edge
