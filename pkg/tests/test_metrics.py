"""Tests for stretch, congestion, diameter, fundamental cycles/cuts and successors."""

import networkx as nx
import pytest

from src.graph.product import grid_graph
from src.graph.types import GraphError
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
from src.tree.sampling import sample_spanning_trees
from src.tree.spanning_tree import TreeError, build_tree, reroot


class TestCycleTree:
    def test_stretch(self, c4, c4_path_tree):
        report = max_stretch(c4, c4_path_tree)
        assert report.value == 3
        assert report.witness_edge == (0, 3)
        assert report.detour == (0, 1, 2, 3)
        assert report.to_json() == {"value": 3, "witness_edge": [0, 3], "detour": [0, 1, 2, 3]}

    def test_congestion_and_diameter(self, c4, c4_path_tree):
        report = max_congestion(c4, c4_path_tree)
        assert report.value == 2
        assert report.witness_tree_edge == (0, 1)
        assert report.cut == ((0, 1), (0, 3))
        assert tree_diameter(c4_path_tree) == 3

    def test_histogram(self, c4, c4_path_tree):
        assert stretch_histogram(c4, c4_path_tree) == {1: 3, 3: 1}

    def test_cotree_and_cycles(self, c4, c4_path_tree):
        assert cotree_edges(c4, c4_path_tree) == ((0, 3),)
        assert fundamental_cycle(c4, c4_path_tree, (0, 3)) == (0, 1, 2, 3)
        assert fundamental_cycles(c4, c4_path_tree) == {(0, 3): (0, 1, 2, 3)}

    def test_incidence_identity(self, c4, c4_path_tree):
        assert incidence_counts(c4, c4_path_tree) == (3, 3)

    def test_misuse_raises(self, c4, c4_path_tree):
        with pytest.raises(TreeError, match="tree edge"):
            fundamental_cycle(c4, c4_path_tree, (1, 2))
        with pytest.raises(TreeError, match="not an edge"):
            fundamental_cycle(c4, c4_path_tree, (0, 2))
        with pytest.raises(TreeError, match="not a tree edge"):
            fundamental_cut(c4, c4_path_tree, (0, 3))


class TestStarTree:
    def test_k4_star(self, k4):
        star = build_tree(k4, [(0, 1), (0, 2), (0, 3)])
        assert max_stretch(k4, star).value == 2
        assert max_congestion(k4, star).value == 3
        assert tree_diameter(star) == 2


class TestAgainstNetworkx:
    def test_diameter(self, p3p4p4):
        for t in sample_spanning_trees(p3p4p4, 10, seed=7):
            assert tree_diameter(t) == nx.diameter(nx.Graph(list(t.edges)))

    def test_congestion_counts_cut_edges(self, p4p5):
        t = next(sample_spanning_trees(p4p5, 1, seed=11))
        ref = nx.Graph(list(p4p5.edges))
        for u, v in t.edges:
            forest = nx.Graph(list(t.edges))
            forest.remove_edge(u, v)
            side = nx.node_connected_component(forest, u)
            assert edge_congestion(p4p5, t, (u, v)) == nx.cut_size(ref, side)

    def test_stretch_is_root_independent(self, k4k5):
        t = next(sample_spanning_trees(k4k5, 1, seed=2))
        assert max_stretch(k4k5, reroot(t, 13)).value == max_stretch(k4k5, t).value


class TestSuccessor:
    def test_q2_path_tree(self, q2):
        # 00 - 01 - 11 - 10
        t = build_tree(q2, [(0, 1), (1, 3), (3, 2)])
        assert [successor(q2, t, v) for v in range(4)] == [1, 3, 3, 1]

    def test_grid_rejected(self):
        g = grid_graph([2, 2])
        t = build_tree(g, [(0, 1), (1, 3), (3, 2)])
        with pytest.raises(GraphError, match="Hamming"):
            successor(g, t, 0)
