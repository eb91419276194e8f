"""
Boundary paths of d-dimensional grids.

A boundary path along axis i fixes every other coordinate at an extreme value
(1 or n_j) and runs x_i from 1 to n_i. Its antipodal partner flips every fixed
extreme. Axes are 0-based factor indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Mapping, Optional, Tuple

from src.graph.product import ProductGraph
from src.graph.types import GraphError, VertexId


@dataclass(frozen=True)
class BoundaryPath:
    """One boundary path: its axis, the fixed extremes, and its vertices in order."""

    axis: int
    corner: Tuple[Tuple[int, int], ...]
    vertices: Tuple[VertexId, ...]

    @property
    def edges(self) -> Tuple[Tuple[VertexId, VertexId], ...]:
        return tuple(zip(self.vertices, self.vertices[1:]))


def _require_grid(g: ProductGraph) -> None:
    if not g.is_grid:
        raise GraphError(f"boundary paths are defined for grids only (got {g.describe()})")


def _check_axis(g: ProductGraph, axis: int) -> None:
    if not isinstance(axis, int) or not 0 <= axis < g.dimension:
        raise GraphError(f"axis {axis!r} out of range [0, {g.dimension})")


def boundary_path(g: ProductGraph, axis: int, corner: Mapping[int, int]) -> BoundaryPath:
    """Path along ``axis`` with every other coordinate j fixed at ``corner[j]`` in {1, n_j}."""
    _require_grid(g)
    _check_axis(g, axis)
    others = [j for j in range(g.dimension) if j != axis]
    if set(corner) != set(others):
        raise GraphError(f"corner must assign exactly the axes {others} (got {sorted(corner)})")
    for j in others:
        if corner[j] not in (1, g.factors[j].size):
            raise GraphError(f"corner value for axis {j} must be 1 or {g.factors[j].size} (got {corner[j]})")
    coord = [0] * g.dimension
    for j in others:
        coord[j] = corner[j]
    vertices = []
    for x in range(1, g.factors[axis].size + 1):
        coord[axis] = x
        vertices.append(g.index_of(tuple(coord)))
    return BoundaryPath(axis=axis, corner=tuple(sorted(corner.items())), vertices=tuple(vertices))


def antipodal_boundary_path(g: ProductGraph, path: BoundaryPath) -> BoundaryPath:
    """Partner path with every fixed extreme flipped ({a_j, b_j} = {1, n_j})."""
    flipped = {j: g.factors[j].size + 1 - a for j, a in path.corner}
    return boundary_path(g, path.axis, flipped)


def boundary_paths(g: ProductGraph, axis: Optional[int] = None) -> Tuple[BoundaryPath, ...]:
    """All 2^(d-1) boundary paths along ``axis``, or all d*2^(d-1) when ``axis`` is None."""
    _require_grid(g)
    axes = range(g.dimension) if axis is None else [axis]
    out = []
    for i in axes:
        _check_axis(g, i)
        others = [j for j in range(g.dimension) if j != i]
        for values in product(*[(1, g.factors[j].size) for j in others]):
            out.append(boundary_path(g, i, dict(zip(others, values))))
    return tuple(out)


def standard_form_pair(g: ProductGraph) -> Tuple[BoundaryPath, BoundaryPath]:
    """The antipodal pair along the last axis: corner all-ones and corner (n_1, ..., n_{d-1})."""
    _require_grid(g)
    last = g.dimension - 1
    first = boundary_path(g, last, {j: 1 for j in range(last)})
    return first, antipodal_boundary_path(g, first)
