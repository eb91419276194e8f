"""Uniform random spanning trees (Wilson's loop-erased random walk)."""

from typing import Iterator, Optional

import numpy as np

from src.graph.host import HostGraph, is_connected
from src.graph.types import GraphError, VertexId
from src.tree.spanning_tree import SpanningTree


def random_spanning_tree(g: HostGraph, rng: np.random.Generator, root: VertexId = 0) -> SpanningTree:
    """Draw one spanning tree uniformly at random; ``rng`` makes the draw reproducible."""
    if not is_connected(g):
        raise GraphError(f"{g.describe()} is not connected")
    n = g.vertex_count
    in_tree = [False] * n
    in_tree[root] = True
    nxt = [root] * n
    for start in range(n):
        u = start
        while not in_tree[u]:
            nbrs = g.neighbors(u)
            nxt[u] = nbrs[int(rng.integers(len(nbrs)))]
            u = nxt[u]
        # retracing the last exits erases the loops of the walk
        u = start
        while not in_tree[u]:
            in_tree[u] = True
            u = nxt[u]
    return SpanningTree.from_parents(nxt, root)


def sample_spanning_trees(g: HostGraph, count: int, seed: Optional[int] = 0) -> Iterator[SpanningTree]:
    """``count`` independent uniform trees from one seeded generator."""
    rng = np.random.default_rng(seed)
    for _ in range(count):
        yield random_spanning_tree(g, rng)
