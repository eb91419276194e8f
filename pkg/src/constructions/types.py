"""Immutable result of an optimal-tree construction."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

from src.graph.product import ProductGraph
from src.graph.types import Family, VertexId
from src.tree.spanning_tree import SpanningTree


@dataclass(frozen=True)
class ConstructionResult:
    """
    Optimal tree of ``graph`` (factors in the caller's order).

    ``dimension_order[k]`` is the caller's axis that plays the k-th smallest
    dimension in the recursive construction.
    """

    family: Family
    graph: ProductGraph
    tree: SpanningTree
    center: VertexId
    predicted: int
    dimension_order: Tuple[int, ...]

    @property
    def sorted_dims(self) -> Tuple[int, ...]:
        return tuple(self.graph.sizes[i] for i in self.dimension_order)

    def to_sorted_coord(self, coord: Sequence[int]) -> Tuple[int, ...]:
        """Caller-order coordinate -> coordinate in ascending-dimension order."""
        return tuple(coord[i] for i in self.dimension_order)

    def from_sorted_coord(self, coord: Sequence[int]) -> Tuple[int, ...]:
        out = [0] * len(coord)
        for k, axis in enumerate(self.dimension_order):
            out[axis] = coord[k]
        return tuple(out)
