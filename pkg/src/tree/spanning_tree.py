"""
Rooted spanning trees of a host graph.

A tree is stored as parent pointers plus depths (the root is its own parent).
Tree paths come from a depth-equalizing walk to the lowest common ancestor;
subtree membership uses DFS entry/exit times.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence, Tuple

from src.graph.host import HostGraph
from src.graph.types import Edge, VertexId, canonical_edge
from src.utils.logger import get_logger

logger = get_logger(__name__)


class TreeError(ValueError):
    """Raised for edge sets that are not spanning trees, or tree/graph mismatches."""


@dataclass(frozen=True)
class SpanningTree:
    """Rooted parent-array tree over vertices 0..n-1; immutable."""

    root: VertexId
    parent: Tuple[VertexId, ...]
    depth: Tuple[int, ...]

    @classmethod
    def from_parents(cls, parent: Sequence[VertexId], root: VertexId) -> SpanningTree:
        """Validate a parent array (root maps to itself) and derive depths."""
        n = len(parent)
        if not 0 <= root < n or parent[root] != root:
            raise TreeError(f"root {root} must map to itself")
        children: list[list[VertexId]] = [[] for _ in range(n)]
        for v, p in enumerate(parent):
            if v == root:
                continue
            if not 0 <= p < n or p == v:
                raise TreeError(f"vertex {v} has invalid parent {p}")
            children[p].append(v)
        depth = [-1] * n
        depth[root] = 0
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for c in children[x]:
                depth[c] = depth[x] + 1
                queue.append(c)
        if min(depth) < 0:
            raise TreeError("parent array contains a cycle or does not reach the root")
        return cls(root=root, parent=tuple(parent), depth=tuple(depth))

    @property
    def vertex_count(self) -> int:
        return len(self.parent)

    @cached_property
    def edges(self) -> Tuple[Edge, ...]:
        return tuple(sorted(canonical_edge(v, p) for v, p in enumerate(self.parent) if v != self.root))

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def children(self) -> Tuple[Tuple[VertexId, ...], ...]:
        out: list[list[VertexId]] = [[] for _ in range(self.vertex_count)]
        for v, p in enumerate(self.parent):
            if v != self.root:
                out[p].append(v)
        return tuple(tuple(c) for c in out)

    @cached_property
    def _intervals(self) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        tin = [0] * self.vertex_count
        tout = [0] * self.vertex_count
        clock = 0
        stack: list[tuple[VertexId, bool]] = [(self.root, False)]
        while stack:
            v, done = stack.pop()
            if done:
                tout[v] = clock
                continue
            tin[v] = clock
            clock += 1
            stack.append((v, True))
            for c in reversed(self.children[v]):
                stack.append((c, False))
        return tuple(tin), tuple(tout)

    def has_edge(self, u: VertexId, v: VertexId) -> bool:
        return canonical_edge(u, v) in self.edge_set

    def in_subtree(self, x: VertexId, top: VertexId) -> bool:
        """Whether ``x`` lies in the subtree hanging from ``top``."""
        tin, tout = self._intervals
        return tin[top] <= tin[x] < tout[top]

    def lower_endpoint(self, e: Edge) -> VertexId:
        """Endpoint of tree edge ``e`` farther from the root."""
        u, v = e
        if not self.has_edge(u, v):
            raise TreeError(f"{e} is not a tree edge")
        return u if self.parent[u] == v and u != self.root else v

    def _check(self, v: VertexId) -> None:
        if not isinstance(v, int) or not 0 <= v < self.vertex_count:
            raise TreeError(f"vertex {v!r} out of range [0, {self.vertex_count})")

    def lca(self, u: VertexId, v: VertexId) -> VertexId:
        self._check(u)
        self._check(v)
        while self.depth[u] > self.depth[v]:
            u = self.parent[u]
        while self.depth[v] > self.depth[u]:
            v = self.parent[v]
        while u != v:
            u = self.parent[u]
            v = self.parent[v]
        return u

    def distance(self, u: VertexId, v: VertexId) -> int:
        a = self.lca(u, v)
        return self.depth[u] + self.depth[v] - 2 * self.depth[a]

    def path(self, u: VertexId, v: VertexId) -> Tuple[VertexId, ...]:
        """Vertices of the unique u-v path in the tree, u first."""
        a = self.lca(u, v)
        up = [u]
        while up[-1] != a:
            up.append(self.parent[up[-1]])
        down = [v]
        while down[-1] != a:
            down.append(self.parent[down[-1]])
        return tuple(up + down[-2::-1])


def check_spans(g: HostGraph, t: SpanningTree) -> None:
    """Raise TreeError unless ``t`` is a spanning tree of ``g``."""
    if t.vertex_count != g.vertex_count:
        raise TreeError(f"tree has {t.vertex_count} vertices but {g.describe()} has {g.vertex_count}")
    for u, v in t.edges:
        if not g.has_edge(u, v):
            raise TreeError(f"tree edge ({u}, {v}) is not an edge of {g.describe()}")


def build_tree(g: HostGraph, edges: Iterable[Tuple[VertexId, VertexId]], root: VertexId = 0) -> SpanningTree:
    """Root an edge set at ``root`` after checking it is a spanning tree of ``g``."""
    n = g.vertex_count
    if not 0 <= root < n:
        raise TreeError(f"root {root} out of range [0, {n})")
    canon = []
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n) or u == v or not g.has_edge(u, v):
            raise TreeError(f"({u}, {v}) is not an edge of {g.describe()}")
        canon.append(canonical_edge(u, v))
    if len(set(canon)) != len(canon):
        raise TreeError("edge set contains duplicates")
    if len(canon) != n - 1:
        raise TreeError(f"a spanning tree of {g.describe()} has {n - 1} edges (got {len(canon)})")
    adj: list[list[VertexId]] = [[] for _ in range(n)]
    for u, v in canon:
        adj[u].append(v)
        adj[v].append(u)
    parent = [-1] * n
    parent[root] = root
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in sorted(adj[x]):
            if parent[y] == -1:
                parent[y] = x
                queue.append(y)
    if -1 in parent:
        raise TreeError("edge set is disconnected (and therefore contains a cycle)")
    return SpanningTree.from_parents(parent, root)


def reroot(t: SpanningTree, root: VertexId) -> SpanningTree:
    """Same edge set, new root."""
    if not 0 <= root < t.vertex_count:
        raise TreeError(f"root {root} out of range [0, {t.vertex_count})")
    adj: list[list[VertexId]] = [[] for _ in range(t.vertex_count)]
    for u, v in t.edges:
        adj[u].append(v)
        adj[v].append(u)
    parent = [-1] * t.vertex_count
    parent[root] = root
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for y in adj[x]:
            if parent[y] == -1:
                parent[y] = x
                queue.append(y)
    return SpanningTree.from_parents(parent, root)


def tree_distance(t: SpanningTree, u: VertexId, v: VertexId) -> int:
    return t.distance(u, v)


def detour_path(t: SpanningTree, u: VertexId, v: VertexId) -> Tuple[VertexId, ...]:
    return t.path(u, v)
