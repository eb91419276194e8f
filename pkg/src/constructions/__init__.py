"""Optimal tree constructions for Hamming graphs and grids, and their closed-form values."""

from typing import Sequence

from src.constructions.grid import grid_optimal_tree, path_center
from src.constructions.hamming import hamming_optimal_tree
from src.constructions.predicted import claim_bound, predicted_stretch, sort_dims
from src.constructions.types import ConstructionResult
from src.graph.types import Family


def construct(family: Family, dims: Sequence[int]) -> ConstructionResult:
    if family is Family.HAMMING:
        return hamming_optimal_tree(dims)
    return grid_optimal_tree(dims)
