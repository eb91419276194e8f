"""Closed-form tree-stretch values and the leaf-to-center bounds of the constructions."""

from typing import List, Sequence, Tuple

from src.graph.factor_spec import validate_dims
from src.graph.types import Family


def sort_dims(dims: Sequence[int]) -> Tuple[List[int], Tuple[int, ...]]:
    """Ascending dims and the permutation (sorted position -> caller's axis); ties keep caller order."""
    validate_dims(dims)
    order = tuple(sorted(range(len(dims)), key=lambda i: (dims[i], i)))
    return [dims[i] for i in order], order


def predicted_stretch(family: Family, dims: Sequence[int]) -> int:
    """
    Hamming: 2d - 1 when the smallest factor is K_2, else 2d.
    Grid: 2 * sum(floor(n_i / 2) over the d - 1 smallest dims) + 1.
    """
    ordered, _ = sort_dims(dims)
    d = len(ordered)
    if family is Family.HAMMING:
        return 2 * d - 1 if ordered[0] == 2 else 2 * d
    return 2 * sum(n // 2 for n in ordered[:-1]) + 1


def claim_bound(family: Family, dims: Sequence[int]) -> int:
    """Largest tree distance from the construction's center to any vertex."""
    ordered, _ = sort_dims(dims)
    if family is Family.HAMMING:
        return len(ordered)
    return sum(n // 2 for n in ordered)
