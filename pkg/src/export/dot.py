"""
Graphviz DOT rendering of host graphs and spanning trees.

Tree edges are solid, cotree edges dotted. Product-graph vertices are labelled
with their coordinates; two-factor products get pinned positions (row = first
coordinate, column = second) so ``neato -n`` keeps the grid layout.
"""

from pathlib import Path
from typing import Any, Dict, List, Optional

import jinja2

from src.graph.host import HostGraph, check_vertex
from src.graph.product import ProductGraph
from src.tree.spanning_tree import SpanningTree, check_spans

TEMPLATE_DIR = Path(__file__).parent / "templates"
# Points between neighbouring rows/columns in pinned layouts.
_SPACING = 72


def _environment() -> jinja2.Environment:
    loader = jinja2.FileSystemLoader(searchpath=TEMPLATE_DIR)
    return jinja2.Environment(loader=loader, trim_blocks=True, lstrip_blocks=True, keep_trailing_newline=True)


def _nodes(g: HostGraph, center: Optional[int]) -> List[Dict[str, Any]]:
    nodes = []
    for v in range(g.vertex_count):
        node: Dict[str, Any] = {"id": v, "label": str(v), "pos": None, "center": v == center}
        if isinstance(g, ProductGraph):
            coord = g.coord_of(v)
            node["label"] = "".join(str(x) for x in coord) if max(g.sizes) <= 10 else ",".join(map(str, coord))
            if g.dimension == 2:
                node["pos"] = f"{coord[1] * _SPACING},{-coord[0] * _SPACING}!"
        nodes.append(node)
    return nodes


def _render(template: str, g: HostGraph, edges: List[Dict[str, Any]], center: Optional[int]) -> str:
    if center is not None:
        check_vertex(g, center)
    pinned = isinstance(g, ProductGraph) and g.dimension == 2
    return (
        _environment()
        .get_template(template)
        .render(name=g.describe(), layout="neato" if pinned else None, nodes=_nodes(g, center), edges=edges)
    )


def graph_to_dot(g: HostGraph, center: Optional[int] = None) -> str:
    return _render("graph.dot.j2", g, [{"u": u, "v": v} for u, v in g.edges], center)


def tree_to_dot(g: HostGraph, t: SpanningTree, center: Optional[int] = None) -> str:
    """Every graph edge, styled by membership in ``t``; ``center`` is drawn filled."""
    check_spans(g, t)
    edges = [{"u": u, "v": v, "tree": t.has_edge(u, v)} for u, v in g.edges]
    return _render("tree.dot.j2", g, edges, center)
