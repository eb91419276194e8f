"""
JSON graph descriptors.

Product form: {"factors": [{"kind": "complete"|"path", "n": int}, ...]}
Explicit form: {"n": int, "edges": [[u, v], ...]}
A product descriptor may also carry the explicit form for interoperability.
"""

from typing import Any, Dict, Union

from src.graph.edge_list import EdgeListGraph, make_edge_list_graph
from src.graph.product import ProductGraph, make_product_graph
from src.graph.types import FactorKind, FactorSpec, GraphError

AnyGraph = Union[ProductGraph, EdgeListGraph]


def graph_to_json(g: AnyGraph, *, include_edges: bool = False) -> Dict[str, Any]:
    if isinstance(g, ProductGraph):
        data: Dict[str, Any] = {"factors": [{"kind": f.kind.value, "n": f.size} for f in g.factors]}
        if include_edges:
            data["n"] = g.vertex_count
            data["edges"] = [list(e) for e in g.edges]
        return data
    return {"n": g.vertex_count, "edges": [list(e) for e in g.edges]}


def _as_int(value: Any, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise GraphError(f"{what} must be an integer (got {value!r})")
    return value


def graph_from_json(data: Dict[str, Any]) -> AnyGraph:
    """Parse either descriptor form; the product form wins when both are present."""
    if not isinstance(data, dict):
        raise GraphError("graph descriptor must be a JSON object")
    if "factors" in data:
        items = data["factors"]
        if not isinstance(items, list):
            raise GraphError(f'"factors" must be a list (got {items!r})')
        factors = []
        for item in items:
            try:
                kind = FactorKind(str(item["kind"]).lower())
            except (KeyError, TypeError, ValueError) as e:
                raise GraphError(f"invalid factor entry {item!r}") from e
            factors.append(FactorSpec(kind, _as_int(item.get("n"), "factor size")))
        return make_product_graph(factors)
    if "n" in data and "edges" in data:
        pairs = data["edges"]
        if not isinstance(pairs, list):
            raise GraphError(f'"edges" must be a list (got {pairs!r})')
        edges = []
        for pair in pairs:
            if not isinstance(pair, (list, tuple)) or len(pair) != 2:
                raise GraphError(f"edge entry {pair!r} must be a pair")
            edges.append((_as_int(pair[0], "edge endpoint"), _as_int(pair[1], "edge endpoint")))
        return make_edge_list_graph(_as_int(data["n"], "vertex count"), edges)
    raise GraphError('graph descriptor needs "factors" or both "n" and "edges"')
