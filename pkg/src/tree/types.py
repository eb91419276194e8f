"""Immutable report types for tree evaluation."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Dict, Tuple

from src.graph.types import Edge, VertexId


@dataclass(frozen=True)
class StretchReport:
    """Max-stretch of a tree plus the graph edge achieving it and its detour."""

    value: int
    witness_edge: Edge
    detour: Tuple[VertexId, ...]

    def to_json(self) -> Dict[str, Any]:
        return {"value": self.value, "witness_edge": list(self.witness_edge), "detour": list(self.detour)}


@dataclass(frozen=True)
class CongestionReport:
    """Largest fundamental edge-cut over tree edges."""

    value: int
    witness_tree_edge: Edge
    cut: Tuple[Edge, ...]

    def to_json(self) -> Dict[str, Any]:
        return {
            "value": self.value,
            "witness_tree_edge": list(self.witness_tree_edge),
            "cut": [list(e) for e in self.cut],
        }
