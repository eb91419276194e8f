"""
Test configuration and fixtures.
"""

import pytest

from src.graph.edge_list import make_edge_list_graph
from src.graph.product import grid_graph, hamming_graph
from src.tree.spanning_tree import build_tree
from src.utils.config import AppConfig, SamplingConfig, SolverConfig


@pytest.fixture
def c4():
    return make_edge_list_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])


@pytest.fixture
def c4_path_tree(c4):
    return build_tree(c4, [(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def k4():
    return make_edge_list_graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])


@pytest.fixture
def q2():
    return hamming_graph([2, 2])


@pytest.fixture
def q3():
    return hamming_graph([2, 2, 2])


@pytest.fixture
def k3k3():
    return hamming_graph([3, 3])


@pytest.fixture
def k4k5():
    return hamming_graph([4, 5])


@pytest.fixture
def p4p5():
    return grid_graph([4, 5])


@pytest.fixture
def p3p4p4():
    return grid_graph([3, 4, 4])


@pytest.fixture
def default_cfg():
    return AppConfig(solver=SolverConfig(), sampling=SamplingConfig())
