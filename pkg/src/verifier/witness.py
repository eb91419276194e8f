"""
Witness finders behind the tree-stretch lower bounds.

Hamming graphs: following v -> s(v) from vertex 0 walks along tree edges and
cannot go on forever without turning back, so it reaches an edge uv with
s(u) = v and s(v) = u. Then f(u) f(v) is a graph edge whose detour is at least
2d - 1 (2d when every factor has at least three vertices).

Grids: the boundary-path argument always leaves some boundary cotree edge with
a detour at least the grid value; ``grid_boundary_witness`` finds the longest.
"""

from __future__ import annotations

from typing import Optional

from src.constructions.predicted import predicted_stretch
from src.graph.boundary import boundary_paths
from src.graph.product import ProductGraph
from src.graph.types import Edge, Family, GraphError, canonical_edge
from src.tree.metrics import successor
from src.tree.spanning_tree import SpanningTree, check_spans
from src.utils.logger import get_logger
from src.verifier.types import GridBoundaryWitness, WitnessCertificate

logger = get_logger(__name__)


class InvariantViolation(RuntimeError):
    """A theorem-backed invariant failed: an implementation bug, never bad input."""


def _require_hamming(g: ProductGraph) -> None:
    if not isinstance(g, ProductGraph) or not g.is_hamming:
        raise GraphError("successor witnesses are defined on Hamming graphs only")


def mutual_successor_edge(g: ProductGraph, t: SpanningTree) -> Edge:
    """First tree edge uv with s(u) = v and s(v) = u reached from vertex 0."""
    _require_hamming(g)
    check_spans(g, t)
    v = 0
    for _ in range(g.vertex_count):
        w = successor(g, t, v)
        if successor(g, t, w) == v:
            return canonical_edge(v, w)
        v = w
    raise InvariantViolation(f"successor walk on {g.describe()} did not close within {g.vertex_count} steps")


def hamming_witness(g: ProductGraph, t: SpanningTree) -> WitnessCertificate:
    u, v = mutual_successor_edge(g, t)
    cotree = canonical_edge(g.antipodal(u), g.antipodal(v))
    detour = t.distance(*cotree)
    bound = predicted_stretch(Family.HAMMING, g.sizes)
    degenerate = cotree == (u, v)
    if detour < bound:
        raise InvariantViolation(f"witness detour {detour} below bound {bound} on {g.describe()}")
    logger.debug(f"{g.describe()}: mutual successors {(u, v)}, antipodal edge {cotree} with detour {detour}")
    return WitnessCertificate(
        tree_edge=(u, v),
        cotree_edge=cotree,
        detour_length=detour,
        bound=bound,
        degenerate=degenerate,
    )


def grid_boundary_witness(g: ProductGraph, t: SpanningTree) -> Optional[GridBoundaryWitness]:
    """
    Longest-detour cotree edge among all boundary-path edges; ties go to the
    smallest edge. None when every boundary edge is in the tree (d = 1).
    """
    if not isinstance(g, ProductGraph) or not g.is_grid:
        raise GraphError("boundary witnesses are defined on grids only")
    check_spans(g, t)
    candidates = sorted(
        {canonical_edge(a, b) for path in boundary_paths(g) for a, b in path.edges if not t.has_edge(a, b)}
    )
    if not candidates:
        return None
    best = max(candidates, key=lambda e: (t.distance(*e), -e[0], -e[1]))
    witness = GridBoundaryWitness(
        edge=best,
        detour_length=t.distance(*best),
        bound=predicted_stretch(Family.GRID, g.sizes),
    )
    if not witness.meets_bound:
        logger.warning(f"{g.describe()}: longest boundary detour {witness.detour_length} < {witness.bound}")
    return witness
