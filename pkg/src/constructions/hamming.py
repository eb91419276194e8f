"""
Optimal spanning tree of K_{n_1} x ... x K_{n_d}.

With dims ascending, the graph is n_1 copies of K_{n_2} x ... x K_{n_d}; each
copy carries the (d-1)-dimensional tree and a star joins the copy centers,
centered at copy 0. Unrolled, every vertex hangs from the vertex obtained by
zeroing its last nonzero coordinate, so the center is the all-zero vertex and
a vertex's depth is its number of nonzero coordinates. For d = 2 this is one
star per row centered in column 0 plus a star in column 0 centered at (0, 0).
"""

from typing import Sequence

from src.constructions.predicted import predicted_stretch, sort_dims
from src.constructions.types import ConstructionResult
from src.graph.product import hamming_graph
from src.graph.types import Family
from src.tree.spanning_tree import build_tree
from src.utils.logger import get_logger

logger = get_logger(__name__)


def hamming_optimal_tree(dims: Sequence[int]) -> ConstructionResult:
    ordered, order = sort_dims(dims)
    g = hamming_graph(dims)
    center = g.index_of(tuple(0 for _ in dims))

    edges = []
    for v in range(g.vertex_count):
        coord = g.coord_of(v)
        y = [coord[axis] for axis in order]
        nonzero = [k for k, value in enumerate(y) if value != 0]
        if not nonzero:
            continue
        parent = list(coord)
        parent[order[nonzero[-1]]] = 0
        edges.append((v, g.index_of(tuple(parent))))

    tree = build_tree(g, edges, root=center)
    predicted = predicted_stretch(Family.HAMMING, ordered)
    logger.debug(f"Built Hamming tree for {g.describe()} (order {order}), predicted stretch {predicted}")
    return ConstructionResult(
        family=Family.HAMMING,
        graph=g,
        tree=tree,
        center=center,
        predicted=predicted,
        dimension_order=order,
    )
