"""Explicit host graph given as a vertex count and an edge list (solver oracle input)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Tuple

from src.graph.types import Edge, GraphError, VertexId, canonical_edge


@dataclass(frozen=True)
class EdgeListGraph:
    """Simple undirected graph on 0..n-1; edges are stored canonical and sorted."""

    n: int
    edge_list: Tuple[Edge, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 1:
            raise GraphError(f"vertex count must be a positive integer (got {self.n!r})")
        seen = set()
        for u, v in self.edge_list:
            for x in (u, v):
                if not isinstance(x, int) or not 0 <= x < self.n:
                    raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {self.n})")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            e = canonical_edge(u, v)
            if e in seen:
                raise GraphError(f"duplicate edge {e}")
            seen.add(e)

    @property
    def vertex_count(self) -> int:
        return self.n

    @cached_property
    def edges(self) -> Tuple[Edge, ...]:
        return tuple(sorted(canonical_edge(u, v) for u, v in self.edge_list))

    @cached_property
    def _adjacency(self) -> Tuple[Tuple[VertexId, ...], ...]:
        adj: list[list[VertexId]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def _edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def neighbors(self, v: VertexId) -> Tuple[VertexId, ...]:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise GraphError(f"vertex {v!r} out of range [0, {self.n})")
        return self._adjacency[v]

    def degree(self, v: VertexId) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: VertexId, v: VertexId) -> bool:
        return canonical_edge(u, v) in self._edge_set

    def describe(self) -> str:
        return f"edge-list(n={self.n}, m={self.edge_count})"


def make_edge_list_graph(n: int, edges: Iterable[Tuple[int, int]]) -> EdgeListGraph:
    return EdgeListGraph(n, tuple((int(u), int(v)) for u, v in edges))
