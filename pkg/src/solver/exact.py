"""
Exact tree-stretch and tree k-spanner decisions for small graphs.

Both start from breadth-first trees, then run the pruned tree search. Graphs
within ``max_vertices`` try every root; larger graphs only a handful of roots
(vertex 0, the product middle, evenly spaced ids). The warm start checks the
clock after each tree. The optimum is reported as the smallest (stretch,
sorted edge tuple), so the returned tree does not depend on search order or
on ``jobs``.
"""

from __future__ import annotations

import time
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Iterator, List, Optional, Tuple

from src.graph.edge_list import make_edge_list_graph
from src.graph.host import HostGraph
from src.graph.product import ProductGraph
from src.graph.types import Edge, FactorKind, VertexId
from src.solver.enumeration import SearchNode, TreeSearch, require_searchable
from src.solver.types import STOP_MAX_VERTICES, STOP_TIME_CAP, SolveBudget, SolveResult, SpannerDecision
from src.tree.metrics import max_stretch
from src.tree.spanning_tree import SpanningTree, build_tree
from src.utils.logger import get_logger

logger = get_logger(__name__)

Incumbent = Tuple[int, Tuple[Edge, ...]]

# roots tried on graphs over max_vertices
_OVERSIZE_ROOTS = 8


def bfs_trees(g: HostGraph, roots: Optional[Iterable[VertexId]] = None) -> Iterator[SpanningTree]:
    """Breadth-first tree from each root (all vertices by default), smallest-id neighbour first."""
    for root in range(g.vertex_count) if roots is None else roots:
        parent: List[VertexId] = [-1] * g.vertex_count
        parent[root] = root
        queue = deque([root])
        while queue:
            x = queue.popleft()
            for y in g.neighbors(x):
                if parent[y] == -1:
                    parent[y] = x
                    queue.append(y)
        yield SpanningTree.from_parents(parent, root)


def warm_start_roots(g: HostGraph, budget: SolveBudget) -> List[VertexId]:
    n = g.vertex_count
    if n <= budget.max_vertices:
        return list(range(n))
    roots = [0]
    if isinstance(g, ProductGraph):
        middle = tuple(f.offset if f.kind is FactorKind.COMPLETE else (f.size + 1) // 2 for f in g.factors)
        roots.append(g.index_of(middle))
    roots.extend(i * n // _OVERSIZE_ROOTS for i in range(1, _OVERSIZE_ROOTS))
    return list(dict.fromkeys(roots))[:_OVERSIZE_ROOTS]


def _score(g: HostGraph, t: SpanningTree) -> Incumbent:
    return max_stretch(g, t).value, t.edges


def _warm_start(g: HostGraph, budget: SolveBudget, deadline: float) -> Tuple[Incumbent, Optional[str]]:
    """Best breadth-first tree; the stop reason is set when the clock ran out first."""
    trees = bfs_trees(g, warm_start_roots(g, budget))
    best = _score(g, next(trees))
    for t in trees:
        if time.monotonic() > deadline:
            logger.warning(f"{g.describe()}: time_cap={budget.time_cap}s reached during the warm start")
            return best, STOP_TIME_CAP
        best = min(best, _score(g, t))
    return best, None


def _solve_node(args: Tuple[int, Tuple[Edge, ...], SearchNode, int, SolveBudget, float]) -> Tuple[
    Optional[Incumbent], int, Optional[str]
]:
    """Worker: search one open node; returns (best leaf, trees reached, stop reason)."""
    n, edges, node, bound, budget, seconds = args
    search = TreeSearch(make_edge_list_graph(n, edges), budget, bound=bound, deadline=time.monotonic() + seconds)
    best: Optional[Incumbent] = None
    for leaf in search.leaves(node):
        candidate = (leaf.stretch, leaf.edges)
        if best is None or candidate < best:
            best = candidate
            search.bound = leaf.stretch
    return best, search.trees_enumerated, search.stop_reason


def _result(g: HostGraph, best: Incumbent, count: int, stop_reason: Optional[str]) -> SolveResult:
    tree = build_tree(g, best[1], root=0)
    return SolveResult(
        optimum=best[0],
        optimal_tree=tree,
        trees_enumerated=count,
        exhausted=stop_reason is None,
        stop_reason=stop_reason,
    )


def _parallel(g: HostGraph, budget: SolveBudget, best: Incumbent, jobs: int, started: float) -> SolveResult:
    search = TreeSearch(g, budget, bound=best[0])
    depth = max(1, (4 * jobs - 1).bit_length())
    found, nodes = search.split(depth)
    for leaf in found:
        best = min(best, (leaf.stretch, leaf.edges))
    count = search.trees_enumerated
    stop_reason = search.stop_reason
    if stop_reason is None and nodes:
        remaining = max(budget.time_cap - (time.monotonic() - started), 1e-3)
        tasks = [(g.vertex_count, g.edges, node, best[0], budget, remaining) for node in nodes]
        logger.info(f"searching {len(nodes)} subtrees of {g.describe()} on {jobs} workers")
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part_best, part_count, part_stop in pool.map(_solve_node, tasks):
                if part_best is not None:
                    best = min(best, part_best)
                count += part_count
                stop_reason = stop_reason or part_stop
    return _result(g, best, count, stop_reason)


def exact_tree_stretch(g: HostGraph, budget: Optional[SolveBudget] = None, jobs: int = 1) -> SolveResult:
    """
    Minimum max-stretch over all spanning trees. If a cap fires, the result
    holds the best tree found with ``exhausted=False``.
    """
    require_searchable(g)
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1 (got {jobs})")
    budget = budget if budget is not None else SolveBudget()
    started = time.monotonic()
    best, warm_stop = _warm_start(g, budget, started + budget.time_cap)
    logger.debug(f"{g.describe()}: breadth-first warm start {best[0]}")

    if warm_stop is not None:
        return _result(g, best, 0, warm_stop)
    if g.vertex_count > budget.max_vertices:
        logger.warning(f"{g.describe()} exceeds max_vertices={budget.max_vertices}; reporting the warm start")
        return _result(g, best, 0, STOP_MAX_VERTICES)
    if jobs > 1:
        result = _parallel(g, budget, best, jobs, started)
    else:
        search = TreeSearch(g, budget, bound=best[0], deadline=started + budget.time_cap)
        for leaf in search.leaves():
            candidate = (leaf.stretch, leaf.edges)
            if candidate < best:
                best = candidate
                search.bound = leaf.stretch
        result = _result(g, best, search.trees_enumerated, search.stop_reason)

    logger.info(
        f"{g.describe()}: tree-stretch {'=' if result.exhausted else '<='} {result.optimum} "
        f"({result.trees_enumerated} trees, {time.monotonic() - started:.2f}s)"
    )
    return result


def k_spanner_decision(g: HostGraph, k: int, budget: Optional[SolveBudget] = None) -> SpannerDecision:
    """Whether some spanning tree has max stretch <= k; stops at the first witness."""
    if k < 1:
        raise ValueError(f"k must be >= 1 (got {k})")
    require_searchable(g)
    budget = budget if budget is not None else SolveBudget()
    deadline = time.monotonic() + budget.time_cap

    for t in bfs_trees(g, warm_start_roots(g, budget)):
        if max_stretch(g, t).value <= k:
            logger.info(f"{g.describe()}: breadth-first tree from {t.root} is a tree {k}-spanner")
            return SpannerDecision(k=k, feasible=True, witness=build_tree(g, t.edges, root=0), trees_enumerated=0)
        if time.monotonic() > deadline:
            logger.warning(f"{g.describe()}: time_cap={budget.time_cap}s reached during the warm start")
            return SpannerDecision(k=k, feasible=None, witness=None, trees_enumerated=0, stop_reason=STOP_TIME_CAP)
    if g.vertex_count > budget.max_vertices:
        logger.warning(f"{g.describe()} exceeds max_vertices={budget.max_vertices}; decision indeterminate")
        return SpannerDecision(k=k, feasible=None, witness=None, trees_enumerated=0, stop_reason=STOP_MAX_VERTICES)

    search = TreeSearch(g, budget, bound=k, deadline=deadline)
    for leaf in search.leaves():
        logger.info(f"{g.describe()}: tree {k}-spanner found after {search.trees_enumerated} trees")
        return SpannerDecision(
            k=k,
            feasible=True,
            witness=build_tree(g, leaf.edges, root=0),
            trees_enumerated=search.trees_enumerated,
        )
    feasible = False if search.completed else None
    logger.info(f"{g.describe()}: tree {k}-spanner feasible={feasible} ({search.trees_enumerated} trees)")
    return SpannerDecision(
        k=k,
        feasible=feasible,
        witness=None,
        trees_enumerated=search.trees_enumerated,
        stop_reason=search.stop_reason,
    )
