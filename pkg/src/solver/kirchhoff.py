"""Spanning-tree count by the Matrix-Tree theorem (independent check on enumeration)."""

import numpy as np
from sympy import Matrix

from src.graph.host import HostGraph


def laplacian_matrix(g: HostGraph) -> np.ndarray:
    n = g.vertex_count
    lap = np.zeros((n, n), dtype=np.int64)
    for u, v in g.edges:
        lap[u, v] = lap[v, u] = -1
        lap[u, u] += 1
        lap[v, v] += 1
    return lap


def count_spanning_trees(g: HostGraph) -> int:
    """Any cofactor of the Laplacian; the determinant is exact (fraction-free Bareiss)."""
    if g.vertex_count == 1:
        return 1
    reduced = laplacian_matrix(g)[1:, 1:]
    return int(Matrix(reduced.tolist()).det(method="bareiss"))
