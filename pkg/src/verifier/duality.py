"""Fundamental cycle / fundamental cut duality."""

from src.graph.host import HostGraph
from src.graph.types import canonical_edge
from src.tree.metrics import fundamental_cut, fundamental_cycles
from src.tree.spanning_tree import SpanningTree
from src.utils.logger import get_logger

logger = get_logger(__name__)


def duality_check(g: HostGraph, t: SpanningTree) -> bool:
    """
    For every tree edge e and cotree edge e': e lies on the fundamental cycle
    of e' iff e' lies in the fundamental cut of e. Checked exhaustively.
    """
    cycles = fundamental_cycles(g, t)
    cycle_edges = {
        e2: {canonical_edge(a, b) for a, b in zip(cycle, cycle[1:])} for e2, cycle in cycles.items()
    }
    for e in t.edges:
        cut = {canonical_edge(a, b) for a, b in fundamental_cut(g, t, e)}
        for e2, on_cycle in cycle_edges.items():
            if (e in on_cycle) != (e2 in cut):
                logger.warning(f"duality fails on {g.describe()} for tree edge {e} and cotree edge {e2}")
                return False
    return True
