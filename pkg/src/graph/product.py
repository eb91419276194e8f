"""
Cartesian products of complete-graph and path factors.

Vertices are addressed two ways: a coordinate vector (complete factors use
0..n-1, path factors use 1..n) and a VertexId obtained by the mixed-radix
codec with factor 0 as the most significant digit. Adjacency is derived from
coordinates on demand.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import prod
from typing import Iterable, Sequence, Tuple, Union

from src.graph.types import Coord, Edge, FactorKind, FactorSpec, GraphError, VertexId


@dataclass(frozen=True)
class ProductGraph:
    """K_{n_1} x ... x P_{n_d} style product; immutable after construction."""

    factors: Tuple[FactorSpec, ...]

    def __post_init__(self) -> None:
        if not self.factors:
            raise GraphError("a product graph needs at least one factor")

    @property
    def dimension(self) -> int:
        return len(self.factors)

    @property
    def sizes(self) -> Tuple[int, ...]:
        return tuple(f.size for f in self.factors)

    @cached_property
    def vertex_count(self) -> int:
        return prod(self.sizes)

    @cached_property
    def strides(self) -> Tuple[int, ...]:
        out = []
        acc = 1
        for size in reversed(self.sizes):
            out.append(acc)
            acc *= size
        return tuple(reversed(out))

    @property
    def is_hamming(self) -> bool:
        return all(f.kind is FactorKind.COMPLETE for f in self.factors)

    @property
    def is_grid(self) -> bool:
        return all(f.kind is FactorKind.PATH for f in self.factors)

    def describe(self) -> str:
        return "x".join(f.label for f in self.factors)

    # codec

    def coord_of(self, v: VertexId) -> Coord:
        if not isinstance(v, int) or not 0 <= v < self.vertex_count:
            raise GraphError(f"vertex {v!r} out of range [0, {self.vertex_count})")
        coord = []
        for factor, stride in zip(self.factors, self.strides):
            digit, v = divmod(v, stride)
            coord.append(digit + factor.offset)
        return tuple(coord)

    def index_of(self, coord: Sequence[int]) -> VertexId:
        if len(coord) != self.dimension:
            raise GraphError(f"coordinate {tuple(coord)} has length {len(coord)}, expected {self.dimension}")
        index = 0
        for value, factor, stride in zip(coord, self.factors, self.strides):
            if not isinstance(value, int) or not factor.contains(value):
                raise GraphError(f"coordinate {tuple(coord)} out of range for factor {factor.label}")
            index += (value - factor.offset) * stride
        return index

    # adjacency

    def neighbors(self, v: VertexId) -> Tuple[VertexId, ...]:
        coord = self.coord_of(v)
        out = []
        for factor, stride, x in zip(self.factors, self.strides, coord):
            if factor.kind is FactorKind.COMPLETE:
                candidates: Iterable[int] = range(factor.offset, factor.offset + factor.size)
            else:
                candidates = (x - 1, x + 1)
            for y in candidates:
                if factor.contains(y) and factor.adjacent(x, y):
                    out.append(v + (y - x) * stride)
        return tuple(sorted(out))

    def degree(self, v: VertexId) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: VertexId, v: VertexId) -> bool:
        cu, cv = self.coord_of(u), self.coord_of(v)
        differing = [i for i in range(self.dimension) if cu[i] != cv[i]]
        return len(differing) == 1 and self.factors[differing[0]].adjacent(cu[differing[0]], cv[differing[0]])

    @cached_property
    def edges(self) -> Tuple[Edge, ...]:
        return tuple((u, w) for u in range(self.vertex_count) for w in self.neighbors(u) if u < w)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    # Hamming-only

    def antipodal(self, v: VertexId) -> VertexId:
        """f(v): every coordinate incremented by one modulo its factor size."""
        if not self.is_hamming:
            raise GraphError(f"antipodal vertices are defined for Hamming graphs only (got {self.describe()})")
        coord = self.coord_of(v)
        return self.index_of(tuple((x + 1) % f.size for x, f in zip(coord, self.factors)))


def make_product_graph(factors: Sequence[FactorSpec]) -> ProductGraph:
    """Build the Cartesian product of ``factors`` (d >= 1, every size >= 2)."""
    if not factors:
        raise GraphError("a product graph needs at least one factor")
    return ProductGraph(tuple(factors))


def hamming_graph(dims: Sequence[int]) -> ProductGraph:
    return make_product_graph([FactorSpec(FactorKind.COMPLETE, n) for n in dims])


def grid_graph(dims: Sequence[int]) -> ProductGraph:
    return make_product_graph([FactorSpec(FactorKind.PATH, n) for n in dims])


def coord_codec(g: ProductGraph, x: Union[VertexId, Sequence[int]]) -> Union[Coord, VertexId]:
    """VertexId -> Coord, or Coord -> VertexId."""
    if isinstance(x, int):
        return g.coord_of(x)
    return g.index_of(tuple(x))
