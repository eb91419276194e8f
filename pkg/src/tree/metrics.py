"""
Tree quantities over a host graph: detour stretch, diameter, fundamental
cycles and edge-cuts, congestion, and the antipodal successor of Hamming graphs.

All argmax reports break ties by the smallest canonical edge.
"""

from __future__ import annotations

from collections import Counter, deque
from typing import Dict, Tuple

from src.graph.host import HostGraph
from src.graph.product import ProductGraph
from src.graph.types import Edge, GraphError, VertexId, canonical_edge
from src.tree.spanning_tree import SpanningTree, TreeError, check_spans
from src.tree.types import CongestionReport, StretchReport


def max_stretch(g: HostGraph, t: SpanningTree) -> StretchReport:
    """max over graph edges uv of d_T(u, v); tree edges contribute 1."""
    check_spans(g, t)
    best: Tuple[int, Edge] | None = None
    for u, v in g.edges:
        d = t.distance(u, v)
        if best is None or d > best[0]:
            best = (d, (u, v))
    if best is None:
        raise TreeError(f"{g.describe()} has no edges")
    value, (u, v) = best
    return StretchReport(value=value, witness_edge=(u, v), detour=t.path(u, v))


def stretch_histogram(g: HostGraph, t: SpanningTree) -> Dict[int, int]:
    """Detour length -> number of graph edges with that detour length."""
    check_spans(g, t)
    return dict(sorted(Counter(t.distance(u, v) for u, v in g.edges).items()))


def _farthest(t: SpanningTree, source: VertexId) -> Tuple[VertexId, int]:
    dist = [-1] * t.vertex_count
    dist[source] = 0
    queue = deque([source])
    far = source
    while queue:
        x = queue.popleft()
        if dist[x] > dist[far]:
            far = x
        nbrs = list(t.children[x])
        if x != t.root:
            nbrs.append(t.parent[x])
        for y in nbrs:
            if dist[y] < 0:
                dist[y] = dist[x] + 1
                queue.append(y)
    return far, dist[far]


def tree_diameter(t: SpanningTree) -> int:
    """Maximum pairwise tree distance (two farthest-vertex sweeps)."""
    a, _ = _farthest(t, t.root)
    _, d = _farthest(t, a)
    return d


def cotree_edges(g: HostGraph, t: SpanningTree) -> Tuple[Edge, ...]:
    check_spans(g, t)
    return tuple(e for e in g.edges if e not in t.edge_set)


def fundamental_cycle(g: HostGraph, t: SpanningTree, e: Edge) -> Tuple[VertexId, ...]:
    """
    Cycle of T + e as a closed vertex sequence without repeating the start:
    the detour of e followed by e itself, so len(result) is the cycle length.
    """
    u, v = e
    if not g.has_edge(u, v):
        raise TreeError(f"({u}, {v}) is not an edge of {g.describe()}")
    if t.has_edge(u, v):
        raise TreeError(f"({u}, {v}) is a tree edge; fundamental cycles are defined for cotree edges")
    return t.path(u, v)


def fundamental_cycles(g: HostGraph, t: SpanningTree) -> Dict[Edge, Tuple[VertexId, ...]]:
    """The fundamental cycle basis: one cycle per cotree edge."""
    return {e: t.path(*e) for e in cotree_edges(g, t)}


def fundamental_cut(g: HostGraph, t: SpanningTree, e: Edge) -> Tuple[Edge, ...]:
    """
    Graph edges with exactly one endpoint in X_e, where X_e is the component of
    T - e that does not contain the root.
    """
    u, v = e
    if not t.has_edge(u, v):
        raise TreeError(f"({u}, {v}) is not a tree edge")
    top = t.lower_endpoint(canonical_edge(u, v))
    return tuple((a, b) for a, b in g.edges if t.in_subtree(a, top) != t.in_subtree(b, top))


def edge_congestion(g: HostGraph, t: SpanningTree, e: Edge) -> int:
    return len(fundamental_cut(g, t, e))


def max_congestion(g: HostGraph, t: SpanningTree) -> CongestionReport:
    check_spans(g, t)
    best: Tuple[Edge, Tuple[Edge, ...]] | None = None
    for e in t.edges:
        cut = fundamental_cut(g, t, e)
        if best is None or len(cut) > len(best[1]):
            best = (e, cut)
    if best is None:
        raise TreeError("a single-vertex tree has no tree edges")
    return CongestionReport(value=len(best[1]), witness_tree_edge=best[0], cut=best[1])


def incidence_counts(g: HostGraph, t: SpanningTree) -> Tuple[int, int]:
    """
    (Σ over tree edges of congestion - 1, Σ over cotree edges of cycle length - 1).
    Both count (tree edge, cotree edge) incidences, so they are equal.
    """
    cut_side = sum(edge_congestion(g, t, e) - 1 for e in t.edges)
    cycle_side = sum(len(cycle) - 1 for cycle in fundamental_cycles(g, t).values())
    return cut_side, cycle_side


def successor(g: ProductGraph, t: SpanningTree, v: VertexId) -> VertexId:
    """s(v): the vertex after v on the tree path from v to its antipodal vertex."""
    if not isinstance(g, ProductGraph) or not g.is_hamming:
        raise GraphError("successors are defined on Hamming graphs only")
    return t.path(v, g.antipodal(v))[1]
