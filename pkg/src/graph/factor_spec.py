"""
Factor-spec grammar: factors separated by 'x', each K<int> or P<int>
("K4xK5", "P3xP4xP4"), plus comma-separated dims lists ("4,5").
"""

import re
from typing import List, Sequence

from src.graph.product import ProductGraph, make_product_graph
from src.graph.types import Family, FactorKind, FactorSpec, GraphError

_FACTOR_PATTERN = re.compile(r"^([KP])(\d+)$")


class FactorSpecError(GraphError):
    """Raised for malformed spec strings or dims lists."""


def parse_factor_spec(text: str) -> List[FactorSpec]:
    """Parse "K4xK5" into factor specs (case-insensitive, whitespace ignored)."""
    cleaned = re.sub(r"\s+", "", text or "").upper()
    if not cleaned:
        raise FactorSpecError("empty factor spec")
    factors = []
    for token in cleaned.split("X"):
        m = _FACTOR_PATTERN.match(token)
        if m is None:
            raise FactorSpecError(f"malformed factor {token!r} in spec {text!r}; expected K<n> or P<n>")
        kind = FactorKind.COMPLETE if m.group(1) == "K" else FactorKind.PATH
        size = int(m.group(2))
        if size < 2:
            raise FactorSpecError(f"factor {token!r} must have size >= 2")
        factors.append(FactorSpec(kind, size))
    return factors


def format_factor_spec(factors: Sequence[FactorSpec]) -> str:
    return "x".join(f.label for f in factors)


def parse_dims(text: str) -> List[int]:
    """Parse "4,5" into [4, 5]; every entry must be an integer >= 2."""
    parts = [p.strip() for p in (text or "").split(",")]
    if not parts or any(p == "" for p in parts):
        raise FactorSpecError(f"malformed dims {text!r}; expected comma-separated integers")
    try:
        dims = [int(p) for p in parts]
    except ValueError as e:
        raise FactorSpecError(f"malformed dims {text!r}; expected comma-separated integers") from e
    validate_dims(dims)
    return dims


def validate_dims(dims: Sequence[int]) -> None:
    if len(dims) == 0:
        raise FactorSpecError("dims must contain at least one entry")
    for n in dims:
        if not isinstance(n, int) or n < 2:
            raise FactorSpecError(f"every dimension must be an integer >= 2 (got {n!r})")


def factors_for_family(family: Family, dims: Sequence[int]) -> List[FactorSpec]:
    validate_dims(dims)
    return [FactorSpec(family.factor_kind, n) for n in dims]


def graph_from_spec(text: str) -> ProductGraph:
    return make_product_graph(parse_factor_spec(text))


def graph_for_family(family: Family, dims: Sequence[int]) -> ProductGraph:
    return make_product_graph(factors_for_family(family, dims))
