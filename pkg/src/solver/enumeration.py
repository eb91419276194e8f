"""
Spanning-tree search by growth from vertex 0.

Every node of the search holds a subtree T containing vertex 0 and the
frontier: the non-excluded graph edges from T to the rest, in discovery order.
The first frontier edge e = (u, w) splits the remaining trees into those that
contain e (w joins T with parent u) and those that do not (e is excluded,
which is only allowed while w can still reach T). Each spanning tree is
reached exactly once.

With a stretch ``bound``, a branch is cut as soon as a placed graph edge has a
tree detour above it. Tree distances between placed vertices never change, so
the cut is exact. A lookahead also cuts when some unplaced vertex has no
possible attachment point close enough to all of its placed neighbours.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

from src.graph.host import HostGraph, is_connected
from src.graph.types import Edge, GraphError, VertexId, canonical_edge
from src.solver.types import STOP_MAX_TREES, STOP_MAX_VERTICES, STOP_TIME_CAP, SolveBudget
from src.tree.spanning_tree import SpanningTree
from src.utils.logger import get_logger

logger = get_logger(__name__)

# Nodes visited between wall-clock checks.
_CLOCK_INTERVAL = 512


@dataclass(frozen=True)
class SearchLeaf:
    """A complete spanning tree: parent array rooted at 0 and its max stretch."""

    parent: Tuple[VertexId, ...]
    stretch: int

    @property
    def edges(self) -> Tuple[Edge, ...]:
        return tuple(sorted(canonical_edge(v, p) for v, p in enumerate(self.parent) if v != p))

    def to_tree(self) -> SpanningTree:
        return SpanningTree.from_parents(self.parent, 0)


@dataclass(frozen=True)
class SearchNode:
    """Picklable snapshot of a search node, used to hand subtrees to worker processes."""

    placed: Tuple[VertexId, ...]
    parent: Tuple[VertexId, ...]
    frontier: Tuple[Edge, ...]
    excluded: frozenset[Edge]
    stretch: int


def require_searchable(g: HostGraph) -> None:
    if g.vertex_count < 2 or not g.edges:
        raise GraphError(f"{g.describe()} needs at least one edge")
    if not is_connected(g):
        raise GraphError(f"{g.describe()} is disconnected and has no spanning tree")


class TreeSearch:
    """
    One search over the spanning trees of ``g``. ``bound`` may be lowered while
    leaves are consumed; leaves with stretch equal to the bound are still produced.
    """

    def __init__(
        self,
        g: HostGraph,
        budget: SolveBudget,
        bound: Optional[int] = None,
        deadline: Optional[float] = None,
    ) -> None:
        self.n = g.vertex_count
        self.adj: List[Tuple[VertexId, ...]] = [tuple(g.neighbors(v)) for v in range(self.n)]
        self.budget = budget
        self.bound = bound
        self.deadline = deadline if deadline is not None else time.monotonic() + budget.time_cap
        self.trees_enumerated = 0
        self.nodes_visited = 0
        self.stop_reason: Optional[str] = None
        self.completed = False
        # split_depth set: nodes at that decision depth are collected instead of expanded
        self.split_depth: Optional[int] = None
        self.splits: List[SearchNode] = []

        self._in_tree = [False] * self.n
        self._parent = [-1] * self.n
        self._placed: List[VertexId] = []
        self._dist = [[0] * self.n for _ in range(self.n)]
        self._excluded: set[Edge] = set()

    # -- state --

    def _place(self, w: VertexId, u: VertexId) -> int:
        """Attach w under u; return the largest detour among w's edges to placed vertices."""
        self._in_tree[w] = True
        self._parent[w] = u
        row_u = self._dist[u]
        row_w = self._dist[w]
        row_w[w] = 0
        for x in self._placed:
            d = row_u[x] + 1
            row_w[x] = d
            self._dist[x][w] = d
        self._placed.append(w)
        worst = 1
        for a in self.adj[w]:
            if self._in_tree[a] and row_w[a] > worst:
                worst = row_w[a]
        return worst

    def _unplace(self, w: VertexId) -> None:
        self._placed.pop()
        self._in_tree[w] = False
        self._parent[w] = -1

    def _start(self, node: Optional[SearchNode]) -> Tuple[List[Edge], int]:
        if node is None:
            self._in_tree[0] = True
            self._parent[0] = 0
            self._placed.append(0)
            return [(0, y) for y in self.adj[0]], 0
        self._in_tree[node.placed[0]] = True
        self._parent[node.placed[0]] = node.placed[0]
        self._placed.append(node.placed[0])
        for w in node.placed[1:]:
            self._place(w, node.parent[w])
        self._excluded = set(node.excluded)
        return list(node.frontier), node.stretch

    def _snapshot(self, frontier: Sequence[Edge], stretch: int) -> SearchNode:
        return SearchNode(
            placed=tuple(self._placed),
            parent=tuple(self._parent),
            frontier=tuple(frontier),
            excluded=frozenset(self._excluded),
            stretch=stretch,
        )

    # -- pruning --

    def _attachable(self, w: VertexId) -> bool:
        """Every unplaced neighbour of w still has an attachment point within bound - 1 of its placed neighbours."""
        limit = self.bound - 1
        for x in self.adj[w]:
            if self._in_tree[x]:
                continue
            anchors = [a for a in self.adj[x] if self._in_tree[a]]
            if len(anchors) < 2:
                continue
            if not any(max(self._dist[p][a] for a in anchors) <= limit for p in self._placed):
                return False
        return True

    def _reachable(self, w: VertexId) -> bool:
        """Whether w still reaches the tree through unplaced vertices and non-excluded edges."""
        seen = {w}
        queue = deque([w])
        while queue:
            z = queue.popleft()
            for y in self.adj[z]:
                if self._in_tree[y]:
                    if canonical_edge(z, y) not in self._excluded:
                        return True
                elif y not in seen:
                    seen.add(y)
                    queue.append(y)
        return False

    # -- budget --

    def _out_of_budget(self) -> bool:
        if self.stop_reason is not None:
            return True
        self.nodes_visited += 1
        if self.nodes_visited % _CLOCK_INTERVAL == 0 and time.monotonic() > self.deadline:
            self.stop_reason = STOP_TIME_CAP
            logger.warning(f"search stopped at time cap after {self.trees_enumerated} trees")
            return True
        return False

    # -- recursion --

    def _grow(self, frontier: List[Edge], stretch: int, depth: int) -> Iterator[SearchLeaf]:
        if self._out_of_budget():
            return
        if len(self._placed) == self.n:
            self.trees_enumerated += 1
            yield SearchLeaf(parent=tuple(self._parent), stretch=stretch)
            if self.trees_enumerated >= self.budget.max_trees_enumerated:
                self.stop_reason = STOP_MAX_TREES
                logger.warning(f"search stopped after {self.trees_enumerated} trees (max_trees)")
            return
        if self.split_depth is not None and depth == self.split_depth:
            self.splits.append(self._snapshot(frontier, stretch))
            return
        if not frontier:
            return

        u, w = frontier[0]
        rest = frontier[1:]

        worst = self._place(w, u)
        if self.bound is None or (worst <= self.bound and self._attachable(w)):
            grown = [e for e in rest if e[1] != w]
            grown.extend((w, y) for y in self.adj[w] if not self._in_tree[y])
            yield from self._grow(grown, max(stretch, worst), depth + 1)
        self._unplace(w)

        if self.stop_reason is not None:
            return
        key = canonical_edge(u, w)
        self._excluded.add(key)
        if self._reachable(w):
            yield from self._grow(rest, stretch, depth + 1)
        self._excluded.discard(key)

    def leaves(self, start: Optional[SearchNode] = None) -> Iterator[SearchLeaf]:
        """Run the search from the root (or from a snapshot) and yield complete trees."""
        if self.n > self.budget.max_vertices:
            self.stop_reason = STOP_MAX_VERTICES
            logger.warning(f"{self.n} vertices exceed max_vertices={self.budget.max_vertices}; search skipped")
            return
        frontier, stretch = self._start(start)
        yield from self._grow(frontier, stretch, 0)
        self.completed = self.stop_reason is None

    def split(self, depth: int) -> Tuple[List[SearchLeaf], List[SearchNode]]:
        """Expand the first ``depth`` decisions; return the trees met on the way and the open nodes."""
        self.split_depth = depth
        found = list(self.leaves())
        return found, self.splits


class SpanningTreeEnumerator:
    """
    Iterable over every spanning tree of ``g``, each exactly once. After
    iteration, ``count``, ``exhausted`` and ``stop_reason`` describe the run.
    """

    def __init__(self, g: HostGraph, budget: Optional[SolveBudget] = None) -> None:
        require_searchable(g)
        self.graph = g
        self.budget = budget if budget is not None else SolveBudget()
        self.count = 0
        self.exhausted = False
        self.stop_reason: Optional[str] = None

    def __iter__(self) -> Iterator[SpanningTree]:
        search = TreeSearch(self.graph, self.budget)
        for leaf in search.leaves():
            self.count = search.trees_enumerated
            yield leaf.to_tree()
        self.count = search.trees_enumerated
        self.stop_reason = search.stop_reason
        self.exhausted = search.completed
        logger.debug(f"enumerated {self.count} spanning trees of {self.graph.describe()} (exhausted={self.exhausted})")


def enumerate_spanning_trees(g: HostGraph, budget: Optional[SolveBudget] = None) -> SpanningTreeEnumerator:
    return SpanningTreeEnumerator(g, budget)
