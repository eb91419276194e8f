"""
Read interface shared by product graphs and explicit edge-list graphs, plus
generic breadth-first helpers over it.
"""

from __future__ import annotations

from collections import deque
from typing import Optional, Protocol, Tuple

from src.graph.types import Edge, GraphError, VertexId


class HostGraph(Protocol):
    """Simple undirected graph on vertices 0..vertex_count-1."""

    @property
    def vertex_count(self) -> int: ...

    def neighbors(self, v: VertexId) -> Tuple[VertexId, ...]:
        """Sorted, duplicate-free neighbours of ``v``."""

    def has_edge(self, u: VertexId, v: VertexId) -> bool: ...

    @property
    def edges(self) -> Tuple[Edge, ...]:
        """All edges as canonical (min, max) pairs, sorted lexicographically."""

    def describe(self) -> str:
        """Short label used in logs and reports."""


def check_vertex(g: HostGraph, v: VertexId) -> None:
    if not isinstance(v, int) or not 0 <= v < g.vertex_count:
        raise GraphError(f"vertex {v!r} out of range [0, {g.vertex_count})")


def bfs_distances(g: HostGraph, source: VertexId) -> list[Optional[int]]:
    """Graph distances from ``source`` (None for unreachable vertices)."""
    check_vertex(g, source)
    dist: list[Optional[int]] = [None] * g.vertex_count
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in g.neighbors(x):
            if dist[y] is None:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def graph_distance(g: HostGraph, u: VertexId, v: VertexId) -> int:
    check_vertex(g, v)
    d = bfs_distances(g, u)[v]
    if d is None:
        raise GraphError(f"vertices {u} and {v} are not connected")
    return d


def is_connected(g: HostGraph) -> bool:
    return all(d is not None for d in bfs_distances(g, 0))
