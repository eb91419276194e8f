"""JSON tree format: {"root": int, "edges": [[u, v], ...]}."""

from typing import Any, Dict

from src.graph.host import HostGraph
from src.tree.spanning_tree import SpanningTree, TreeError, build_tree


def tree_to_json(t: SpanningTree) -> Dict[str, Any]:
    return {"root": t.root, "edges": [list(e) for e in t.edges]}


def tree_from_json(g: HostGraph, data: Dict[str, Any]) -> SpanningTree:
    """Parse and validate against ``g``; extra keys (e.g. "predicted") are ignored."""
    if not isinstance(data, dict) or not isinstance(data.get("edges"), list):
        raise TreeError('tree JSON must be an object with an "edges" list')
    edges = []
    for pair in data["edges"]:
        if not isinstance(pair, (list, tuple)) or len(pair) != 2 or not all(type(x) is int for x in pair):
            raise TreeError(f"tree edge entry {pair!r} must be a pair of integers")
        edges.append((pair[0], pair[1]))
    root = data.get("root", 0)
    if type(root) is not int:
        raise TreeError(f"tree root must be an integer (got {root!r})")
    return build_tree(g, edges, root=root)
