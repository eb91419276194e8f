"""Tests for product graphs, the vertex codec, edge lists and boundary paths."""

import networkx as nx
import pytest

from src.graph.boundary import antipodal_boundary_path, boundary_path, boundary_paths, standard_form_pair
from src.graph.edge_list import make_edge_list_graph
from src.graph.factor_spec import (
    FactorSpecError,
    format_factor_spec,
    graph_from_spec,
    parse_dims,
    parse_factor_spec,
)
from src.graph.host import bfs_distances, graph_distance, is_connected
from src.graph.product import coord_codec, grid_graph, hamming_graph
from src.graph.types import FactorKind, FactorSpec, GraphError


class TestCodec:
    def test_hamming_coordinates_are_zero_based(self):
        g = hamming_graph([4, 5])
        assert g.vertex_count == 20
        assert g.coord_of(0) == (0, 0)
        assert g.coord_of(7) == (1, 2)
        assert g.index_of((3, 4)) == 19

    def test_grid_coordinates_are_one_based(self):
        g = grid_graph([3, 4])
        assert g.coord_of(0) == (1, 1)
        assert g.index_of((3, 4)) == 11
        assert coord_codec(g, 5) == (2, 2)
        assert coord_codec(g, (2, 2)) == 5

    def test_round_trip_over_all_vertices(self):
        g = grid_graph([3, 4, 4])
        assert all(g.index_of(g.coord_of(v)) == v for v in range(g.vertex_count))

    def test_out_of_range_rejected(self):
        g = hamming_graph([2, 3])
        with pytest.raises(GraphError, match="out of range"):
            g.coord_of(6)
        with pytest.raises(GraphError, match="out of range"):
            g.index_of((0, 3))
        with pytest.raises(GraphError, match="length"):
            g.index_of((0,))

    def test_factor_size_must_be_at_least_two(self):
        with pytest.raises(GraphError, match=">= 2"):
            FactorSpec(FactorKind.PATH, 1)


class TestAdjacency:
    @pytest.mark.parametrize(
        "dims,edges",
        [([3], 3), ([4, 5], 20 * 7 // 2), ([2, 2, 2], 12), ([3, 3], 18)],
    )
    def test_hamming_edge_count(self, dims, edges):
        assert hamming_graph(dims).edge_count == edges

    @pytest.mark.parametrize("dims,edges", [([4], 3), ([4, 5], 31), ([3, 4, 4], 104)])
    def test_grid_edge_count(self, dims, edges):
        assert grid_graph(dims).edge_count == edges

    def test_handshake(self):
        g = grid_graph([3, 4, 4])
        assert sum(g.degree(v) for v in range(g.vertex_count)) == 2 * g.edge_count

    def test_matches_networkx_products(self):
        g = grid_graph([3, 4])
        ref = nx.convert_node_labels_to_integers(nx.grid_2d_graph(3, 4), ordering="sorted")
        assert sorted(g.edges) == sorted(tuple(sorted(e)) for e in ref.edges)

    def test_edges_are_canonical_and_sorted(self):
        g = hamming_graph([3, 3])
        assert list(g.edges) == sorted(g.edges)
        assert all(u < v for u, v in g.edges)

    def test_distances_match_networkx(self):
        g = hamming_graph([3, 4])
        ref = nx.Graph(list(g.edges))
        expected = nx.single_source_shortest_path_length(ref, 0)
        assert bfs_distances(g, 0) == [expected[v] for v in range(g.vertex_count)]


class TestAntipodal:
    def test_every_coordinate_shifts(self):
        g = hamming_graph([3, 4])
        assert g.coord_of(g.antipodal(g.index_of((2, 3)))) == (0, 0)

    def test_antipodal_is_at_distance_d(self):
        g = hamming_graph([2, 3, 4])
        assert all(graph_distance(g, v, g.antipodal(v)) == 3 for v in range(g.vertex_count))

    def test_not_an_involution_for_larger_factors(self):
        g = hamming_graph([3])
        assert g.antipodal(g.antipodal(0)) != 0

    def test_grid_has_no_antipodal_map(self):
        with pytest.raises(GraphError, match="Hamming"):
            grid_graph([3, 3]).antipodal(0)


class TestFactorSpec:
    def test_parse_and_format(self):
        factors = parse_factor_spec("k4xK5")
        assert factors == [FactorSpec(FactorKind.COMPLETE, 4), FactorSpec(FactorKind.COMPLETE, 5)]
        assert format_factor_spec(factors) == "K4xK5"

    def test_mixed_spec(self):
        assert graph_from_spec("P3xK2").describe() == "P3xK2"

    @pytest.mark.parametrize("text", ["", "K4x", "Q3", "K1", "K4*K5"])
    def test_malformed_spec(self, text):
        with pytest.raises(FactorSpecError):
            parse_factor_spec(text)

    def test_parse_dims(self):
        assert parse_dims("4, 5") == [4, 5]
        with pytest.raises(FactorSpecError):
            parse_dims("4,,5")
        with pytest.raises(FactorSpecError):
            parse_dims("1,3")


class TestEdgeListGraph:
    def test_rejects_self_loops_and_duplicates(self):
        with pytest.raises(GraphError, match="self-loop"):
            make_edge_list_graph(3, [(1, 1)])
        with pytest.raises(GraphError, match="duplicate"):
            make_edge_list_graph(3, [(0, 1), (1, 0)])
        with pytest.raises(GraphError, match="outside"):
            make_edge_list_graph(3, [(0, 3)])

    def test_read_interface(self, c4):
        assert c4.edges == ((0, 1), (0, 3), (1, 2), (2, 3))
        assert c4.neighbors(0) == (1, 3)
        assert c4.has_edge(3, 0)
        assert not c4.has_edge(0, 2)
        assert is_connected(c4)

    def test_disconnected(self):
        assert not is_connected(make_edge_list_graph(4, [(0, 1), (2, 3)]))


class TestBoundaryPaths:
    def test_counts(self):
        g = grid_graph([3, 4, 4])
        assert len(boundary_paths(g)) == 3 * 4
        assert len(boundary_paths(g, axis=2)) == 4

    def test_path_runs_along_axis(self):
        g = grid_graph([3, 4])
        path = boundary_path(g, 1, {0: 3})
        assert [g.coord_of(v) for v in path.vertices] == [(3, 1), (3, 2), (3, 3), (3, 4)]
        assert all(g.has_edge(a, b) for a, b in path.edges)

    def test_antipodal_path_flips_extremes(self):
        g = grid_graph([3, 4, 4])
        first, second = standard_form_pair(g)
        assert first.axis == second.axis == 2
        assert dict(first.corner) == {0: 1, 1: 1}
        assert dict(second.corner) == {0: 3, 1: 4}
        assert antipodal_boundary_path(g, second) == first

    @pytest.mark.parametrize("dims", [(5,), (2, 3), (3, 4, 4), (2, 2, 2)])
    def test_paths_along_an_axis_are_disjoint(self, dims):
        g = grid_graph(dims)
        for axis in range(len(dims)):
            paths = boundary_paths(g, axis=axis)
            covered = set().union(*(p.vertices for p in paths))
            assert len(covered) == len(paths) * dims[axis]

    def test_corner_must_be_extreme(self):
        with pytest.raises(GraphError, match="corner value"):
            boundary_path(grid_graph([3, 4]), 1, {0: 2})

    def test_only_on_grids(self):
        with pytest.raises(GraphError, match="grids only"):
            boundary_paths(hamming_graph([3, 3]))
