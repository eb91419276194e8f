"""
Optimal spanning tree of P_{n_1} x ... x P_{n_d}.

With dims ascending, G_i = G_{i-1} x P_{n_i} is n_i copies of G_{i-1}; a central
path along axis i joins the copy centers. The largest dimension carries the
outermost central path. Path centers sit at index ceil(n/2) (1-based), which
keeps every vertex of P_n within floor(n/2) of the center. Unrolled, a vertex
hangs from the vertex obtained by stepping its first off-center coordinate one
unit toward the center, so its depth is sum |x_i - c_i|.
"""

from typing import Sequence

from src.constructions.predicted import predicted_stretch, sort_dims
from src.constructions.types import ConstructionResult
from src.graph.product import grid_graph
from src.graph.types import Family
from src.tree.spanning_tree import build_tree
from src.utils.logger import get_logger

logger = get_logger(__name__)


def path_center(n: int) -> int:
    """1-based center index of P_n."""
    return (n + 1) // 2


def grid_optimal_tree(dims: Sequence[int]) -> ConstructionResult:
    ordered, order = sort_dims(dims)
    g = grid_graph(dims)
    centers = [path_center(n) for n in ordered]
    center_coord = [0] * len(dims)
    for k, axis in enumerate(order):
        center_coord[axis] = centers[k]
    center = g.index_of(tuple(center_coord))

    edges = []
    for v in range(g.vertex_count):
        coord = g.coord_of(v)
        for k, axis in enumerate(order):
            if coord[axis] != centers[k]:
                parent = list(coord)
                parent[axis] += 1 if coord[axis] < centers[k] else -1
                edges.append((v, g.index_of(tuple(parent))))
                break

    tree = build_tree(g, edges, root=center)
    predicted = predicted_stretch(Family.GRID, ordered)
    logger.debug(f"Built grid tree for {g.describe()} (order {order}), predicted stretch {predicted}")
    return ConstructionResult(
        family=Family.GRID,
        graph=g,
        tree=tree,
        center=center,
        predicted=predicted,
        dimension_order=order,
    )
