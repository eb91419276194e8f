"""
Independent re-checking of Hamming witness certificates, and their JSON form.

``check_certificate`` trusts nothing in the certificate: every field is
re-derived from (g, t). It never raises; a failed check carries a reason.
"""

from __future__ import annotations

from typing import Any, Dict

from src.constructions.predicted import predicted_stretch
from src.graph.product import ProductGraph
from src.graph.types import Family, canonical_edge
from src.tree.metrics import successor
from src.tree.spanning_tree import SpanningTree, TreeError, check_spans
from src.utils.logger import get_logger
from src.verifier.types import CertificateCheck, CertificateReason, WitnessCertificate

logger = get_logger(__name__)


def _fail(reason: CertificateReason) -> CertificateCheck:
    logger.debug(f"certificate rejected: {reason}")
    return CertificateCheck(ok=False, reason=reason)


def _in_range(g: ProductGraph, *vertices: int) -> bool:
    return all(isinstance(x, int) and 0 <= x < g.vertex_count for x in vertices)


def _is_pair(edge: Any) -> bool:
    return isinstance(edge, (list, tuple)) and len(edge) == 2


def check_certificate(g: ProductGraph, t: SpanningTree, c: WitnessCertificate) -> CertificateCheck:
    if not isinstance(g, ProductGraph) or not g.is_hamming:
        return _fail(CertificateReason.NOT_HAMMING)
    try:
        check_spans(g, t)
    except TreeError:
        return _fail(CertificateReason.TREE_MISMATCH)

    if not _is_pair(c.tree_edge):
        return _fail(CertificateReason.NOT_TREE_EDGE)
    u, v = c.tree_edge
    if not _in_range(g, u, v) or not t.has_edge(u, v):
        return _fail(CertificateReason.NOT_TREE_EDGE)
    if successor(g, t, u) != v or successor(g, t, v) != u:
        return _fail(CertificateReason.SUCCESSOR_MISMATCH)

    if not _is_pair(c.cotree_edge):
        return _fail(CertificateReason.NOT_GRAPH_EDGE)
    a, b = c.cotree_edge
    if not _in_range(g, a, b) or not g.has_edge(a, b):
        return _fail(CertificateReason.NOT_GRAPH_EDGE)
    k2 = g.dimension == 1 and g.sizes[0] == 2
    if c.degenerate != k2:
        return _fail(CertificateReason.DEGENERATE_MISMATCH)
    if not c.degenerate and t.has_edge(a, b):
        return _fail(CertificateReason.NOT_COTREE_EDGE)
    if canonical_edge(a, b) != canonical_edge(g.antipodal(u), g.antipodal(v)):
        return _fail(CertificateReason.ANTIPODAL_MISMATCH)

    if c.detour_length != t.distance(a, b):
        return _fail(CertificateReason.DETOUR_MISMATCH)
    if c.bound != predicted_stretch(Family.HAMMING, g.sizes):
        return _fail(CertificateReason.BOUND_MISMATCH)
    if c.detour_length < c.bound:
        return _fail(CertificateReason.BELOW_BOUND)
    return CertificateCheck(ok=True)


def certificate_to_json(c: WitnessCertificate) -> Dict[str, Any]:
    return {
        "tree_edge": list(c.tree_edge),
        "cotree_edge": list(c.cotree_edge),
        "detour_length": c.detour_length,
        "bound": c.bound,
        "degenerate": c.degenerate,
    }


def _edge(value: Any, key: str) -> tuple[int, int]:
    if not isinstance(value, list) or len(value) != 2 or not all(isinstance(x, int) for x in value):
        raise ValueError(f"certificate field {key!r} must be a pair of integers")
    return value[0], value[1]


def certificate_from_json(data: Dict[str, Any]) -> WitnessCertificate:
    """Parse the certificate JSON object; ``degenerate`` defaults to false."""
    if not isinstance(data, dict):
        raise ValueError("certificate must be a JSON object")
    for key in ("detour_length", "bound"):
        if not isinstance(data.get(key), int) or isinstance(data.get(key), bool):
            raise ValueError(f"certificate field {key!r} must be an integer")
    degenerate = data.get("degenerate", False)
    if not isinstance(degenerate, bool):
        raise ValueError("certificate field 'degenerate' must be a boolean")
    return WitnessCertificate(
        tree_edge=_edge(data.get("tree_edge"), "tree_edge"),
        cotree_edge=_edge(data.get("cotree_edge"), "cotree_edge"),
        detour_length=data["detour_length"],
        bound=data["bound"],
        degenerate=degenerate,
    )
