"""Exact oracle: enumeration, Matrix-Tree counts, exact tree-stretch and k-spanner decisions."""

import time

import pytest

from src.graph.edge_list import make_edge_list_graph
from src.graph.product import grid_graph, hamming_graph
from src.graph.types import GraphError
from src.solver import (
    SolveBudget,
    count_spanning_trees,
    enumerate_spanning_trees,
    exact_tree_stretch,
    k_spanner_decision,
)
from src.solver.exact import bfs_trees, warm_start_roots
from src.tree.metrics import max_stretch
from src.utils.config import SolverConfig


def _complete(n):
    return make_edge_list_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def _cycle(n):
    return make_edge_list_graph(n, [(i, (i + 1) % n) for i in range(n)])


class TestKirchhoff:
    @pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
    def test_cayley(self, n):
        assert count_spanning_trees(_complete(n)) == n ** (n - 2)

    @pytest.mark.parametrize("n", [3, 4, 7])
    def test_cycle(self, n):
        assert count_spanning_trees(_cycle(n)) == n

    def test_tree_has_one(self):
        assert count_spanning_trees(make_edge_list_graph(4, [(0, 1), (1, 2), (1, 3)])) == 1


class TestEnumeration:
    @pytest.mark.parametrize(
        "graph",
        [_cycle(4), _complete(4), hamming_graph([2, 3]), hamming_graph([2, 2, 2]), grid_graph([3, 3])],
        ids=["C4", "K4", "K2xK3", "Q3", "P3xP3"],
    )
    def test_count_matches_matrix_tree(self, graph):
        enumerator = enumerate_spanning_trees(graph)
        trees = list(enumerator)
        assert enumerator.exhausted
        assert enumerator.stop_reason is None
        assert enumerator.count == len(trees) == count_spanning_trees(graph)
        assert len({t.edges for t in trees}) == len(trees)
        for t in trees:
            assert len(t.edges) == graph.vertex_count - 1
            assert all(graph.has_edge(u, v) for u, v in t.edges)

    def test_known_counts(self):
        assert count_spanning_trees(_cycle(4)) == 4
        assert count_spanning_trees(_complete(4)) == 16
        assert count_spanning_trees(hamming_graph([2, 3])) == 75
        assert count_spanning_trees(hamming_graph([2, 2, 2])) == 384

    def test_k3k3_count(self, k3k3):
        enumerator = enumerate_spanning_trees(k3k3)
        assert sum(1 for _ in enumerator) == count_spanning_trees(k3k3) == 11664

    def test_max_trees_budget(self, k4):
        enumerator = enumerate_spanning_trees(k4, SolveBudget(max_trees_enumerated=5))
        assert len(list(enumerator)) == 5
        assert not enumerator.exhausted
        assert enumerator.stop_reason == "max_trees"

    def test_time_cap(self, k3k3):
        enumerator = enumerate_spanning_trees(k3k3, SolveBudget(time_cap=1e-9))
        found = list(enumerator)
        assert len(found) < 11664
        assert enumerator.stop_reason == "time_cap"

    def test_max_vertices(self, k4k5):
        enumerator = enumerate_spanning_trees(k4k5)
        assert list(enumerator) == []
        assert enumerator.stop_reason == "max_vertices"

    def test_disconnected_rejected(self):
        with pytest.raises(GraphError, match="disconnected"):
            enumerate_spanning_trees(make_edge_list_graph(4, [(0, 1), (2, 3)]))


class TestExactTreeStretch:
    @pytest.mark.parametrize(
        "graph,expected",
        [
            (hamming_graph([3]), 2),
            (hamming_graph([2, 2]), 3),
            (hamming_graph([2, 3]), 3),
            (hamming_graph([3, 3]), 4),
            (hamming_graph([2, 2, 2]), 5),
            (grid_graph([2, 2]), 3),
            (grid_graph([2, 3]), 3),
            (grid_graph([3, 3]), 3),
            (grid_graph([2, 2, 2]), 5),
        ],
        ids=lambda v: v.describe() if hasattr(v, "describe") else str(v),
    )
    def test_matches_closed_form(self, graph, expected):
        result = exact_tree_stretch(graph)
        assert result.exhausted
        assert result.stop_reason is None
        assert result.optimum == expected
        assert max_stretch(graph, result.optimal_tree).value == expected

    def test_edge_list_input(self):
        assert exact_tree_stretch(_cycle(5)).optimum == 4
        assert exact_tree_stretch(_complete(5)).optimum == 2

    @pytest.mark.parametrize("graph", [hamming_graph([2, 3]), grid_graph([3, 3]), _complete(5)])
    def test_agrees_with_brute_force(self, graph):
        enumerator = enumerate_spanning_trees(graph)
        values = [(max_stretch(graph, t).value, t.edges) for t in enumerator]
        best = min(values)
        result = exact_tree_stretch(graph)
        assert result.optimum == best[0]
        assert result.optimal_tree.edges == best[1]

    def test_parallel_matches_serial(self, k3k3):
        serial = exact_tree_stretch(k3k3)
        parallel = exact_tree_stretch(k3k3, jobs=2)
        assert parallel.exhausted
        assert parallel.optimum == serial.optimum == 4
        assert parallel.optimal_tree.edges == serial.optimal_tree.edges

    def test_over_vertex_budget_reports_bound(self, k4k5):
        result = exact_tree_stretch(k4k5)
        assert not result.exhausted
        assert result.stop_reason == "max_vertices"
        assert result.optimum == 4
        assert result.trees_enumerated == 0

    def test_tree_budget(self, k3k3):
        result = exact_tree_stretch(k3k3, SolveBudget(max_trees_enumerated=1))
        assert not result.exhausted
        assert result.stop_reason == "max_trees"
        assert result.optimum >= 4

    def test_to_json(self, c4):
        data = exact_tree_stretch(c4).to_json()
        assert data["optimum"] == 3
        assert data["exhausted"] is True
        assert data["stop_reason"] is None
        assert len(data["optimal_tree"]["edges"]) == 3

    def test_invalid_jobs(self, c4):
        with pytest.raises(ValueError, match="jobs"):
            exact_tree_stretch(c4, jobs=0)


class TestSpannerDecision:
    def test_c4(self, c4):
        yes = k_spanner_decision(c4, 3)
        assert yes.feasible is True
        assert max_stretch(c4, yes.witness).value <= 3
        no = k_spanner_decision(c4, 2)
        assert no.feasible is False
        assert no.witness is None
        assert no.stop_reason is None

    def test_monotone(self):
        g = hamming_graph([2, 3])
        answers = [k_spanner_decision(g, k).feasible for k in range(1, 6)]
        assert answers == [False, False, True, True, True]

    def test_k4k5(self, k4k5):
        yes = k_spanner_decision(k4k5, 4)
        assert yes.feasible is True
        assert max_stretch(k4k5, yes.witness).value <= 4
        assert k_spanner_decision(k4k5, 3).feasible is not True

    def test_p4p5(self, p4p5):
        yes = k_spanner_decision(p4p5, 5)
        assert yes.feasible is True
        assert max_stretch(p4p5, yes.witness).value <= 5
        undecided = k_spanner_decision(p4p5, 4)
        assert undecided.feasible is not True
        assert undecided.stop_reason == "max_vertices"
        refuted = k_spanner_decision(p4p5, 4, SolveBudget(max_vertices=20))
        assert refuted.feasible is False
        assert refuted.stop_reason is None

    def test_k3k3_refuted_below_optimum(self, k3k3):
        decision = k_spanner_decision(k3k3, 4)
        assert decision.feasible is True
        assert max_stretch(k3k3, decision.witness).value == 4
        refuted = k_spanner_decision(k3k3, 3)
        assert refuted.feasible is False
        assert refuted.trees_enumerated == 0

    def test_invalid_k(self, c4):
        with pytest.raises(ValueError, match="k must be"):
            k_spanner_decision(c4, 0)


class TestWarmStart:
    def test_one_tree_per_root(self, p4p5):
        trees = list(bfs_trees(p4p5))
        assert [t.root for t in trees] == list(range(p4p5.vertex_count))

    def test_center_root_is_optimal_on_p4p5(self, p4p5):
        assert min(max_stretch(p4p5, t).value for t in bfs_trees(p4p5)) == 5

    def test_roots_on_oversize_graph(self, p4p5):
        assert warm_start_roots(p4p5, SolveBudget(max_vertices=20)) == list(range(20))
        assert warm_start_roots(p4p5, SolveBudget()) == [0, 7, 2, 5, 10, 12, 15, 17]

    def test_oversize_graph_returns_quickly(self):
        g = grid_graph([12, 12, 12])
        started = time.monotonic()
        result = exact_tree_stretch(g)
        assert time.monotonic() - started < 30
        assert result.stop_reason == "max_vertices"
        assert not result.exhausted

    def test_time_cap_stops_warm_start(self):
        g = grid_graph([12, 12, 12])
        budget = SolveBudget(max_vertices=g.vertex_count, time_cap=1e-6)
        started = time.monotonic()
        result = exact_tree_stretch(g, budget)
        decision = k_spanner_decision(g, 3, budget)
        assert time.monotonic() - started < 30
        assert result.stop_reason == "time_cap"
        assert not result.exhausted
        assert result.trees_enumerated == 0
        assert decision.feasible is None
        assert decision.stop_reason == "time_cap"


class TestBudget:
    def test_from_config(self):
        budget = SolveBudget.from_config(SolverConfig(max_vertices=9, max_trees=100, time_cap_seconds=2.5))
        assert budget == SolveBudget(max_vertices=9, max_trees_enumerated=100, time_cap=2.5)

    def test_defaults(self, default_cfg):
        assert SolveBudget() == SolveBudget(max_vertices=12, max_trees_enumerated=10**7, time_cap=300.0)
        assert SolveBudget.from_config(default_cfg.solver) == SolveBudget()

    def test_positive(self):
        with pytest.raises(ValueError, match="positive"):
            SolveBudget(time_cap=0)
