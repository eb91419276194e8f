"""Immutable value types shared by the graph package."""

from __future__ import annotations

from dataclasses import dataclass
from enum import StrEnum
from typing import Tuple

# Vertex ids are plain ints in [0, vertex_count); coordinates follow the factor conventions.
VertexId = int
Coord = Tuple[int, ...]
Edge = Tuple[int, int]


class GraphError(ValueError):
    """Raised for invalid factors, vertices, coordinates or edge lists."""


class FactorKind(StrEnum):
    """Factor type of a Cartesian product."""

    COMPLETE = "complete"
    PATH = "path"


@dataclass(frozen=True)
class FactorSpec:
    """One factor K_n or P_n of a product graph."""

    kind: FactorKind
    size: int

    def __post_init__(self) -> None:
        if not isinstance(self.size, int) or self.size < 2:
            raise GraphError(f"factor size must be an integer >= 2 (got {self.size!r})")

    @property
    def offset(self) -> int:
        """First coordinate value: 0 for complete factors, 1 for paths."""
        return 0 if self.kind is FactorKind.COMPLETE else 1

    @property
    def label(self) -> str:
        return f"{'K' if self.kind is FactorKind.COMPLETE else 'P'}{self.size}"

    def contains(self, value: int) -> bool:
        return self.offset <= value < self.offset + self.size

    def adjacent(self, a: int, b: int) -> bool:
        """Adjacency of two coordinate values inside this factor."""
        if self.kind is FactorKind.COMPLETE:
            return a != b
        return abs(a - b) == 1


def canonical_edge(u: VertexId, v: VertexId) -> Edge:
    """Edge identity: (min id, max id)."""
    return (u, v) if u < v else (v, u)


class Family(StrEnum):
    """Single-kind product families with closed-form tree-stretch."""

    HAMMING = "hamming"
    GRID = "grid"

    @property
    def factor_kind(self) -> FactorKind:
        return FactorKind.COMPLETE if self is Family.HAMMING else FactorKind.PATH
