"""Certificate and spot-check records produced by the verifier."""

from __future__ import annotations

from dataclasses import dataclass
from enum import StrEnum
from typing import Optional

from src.graph.types import Edge


@dataclass(frozen=True)
class WitnessCertificate:
    """
    Lower-bound witness for a spanning tree of a Hamming graph.

    ``tree_edge`` is a mutual-successor pair (s(u) = v, s(v) = u); ``cotree_edge``
    is (f(u), f(v)), whose detour must reach ``bound``. ``degenerate`` marks K_2,
    where (f(u), f(v)) is the tree edge itself.
    """

    tree_edge: Edge
    cotree_edge: Edge
    detour_length: int
    bound: int
    degenerate: bool = False


class CertificateReason(StrEnum):
    """Why a certificate failed re-checking."""

    NOT_HAMMING = "not a hamming graph"
    TREE_MISMATCH = "tree does not span graph"
    NOT_TREE_EDGE = "tree edge not in tree"
    SUCCESSOR_MISMATCH = "successor mismatch"
    NOT_GRAPH_EDGE = "not a graph edge"
    NOT_COTREE_EDGE = "not a cotree edge"
    DEGENERATE_MISMATCH = "degenerate mismatch"
    ANTIPODAL_MISMATCH = "antipodal mismatch"
    DETOUR_MISMATCH = "detour mismatch"
    BOUND_MISMATCH = "bound mismatch"
    BELOW_BOUND = "below bound"


@dataclass(frozen=True)
class CertificateCheck:
    ok: bool
    reason: Optional[CertificateReason] = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class GridBoundaryWitness:
    """Boundary cotree edge with the longest detour, against the grid tree-stretch value."""

    edge: Edge
    detour_length: int
    bound: int

    @property
    def meets_bound(self) -> bool:
        return self.detour_length >= self.bound
