"""
Pure helpers for the table subcommand: the dimension sweep and one row per
dims tuple (predicted, constructed-and-measured, exact when in budget).
"""

from itertools import combinations_with_replacement
from typing import Any, Dict, List, Sequence, Tuple

import pandas as pd

from src.constructions import construct
from src.graph.factor_spec import format_factor_spec, factors_for_family
from src.graph.types import Family
from src.solver.exact import exact_tree_stretch
from src.solver.types import SolveBudget
from src.tree.metrics import max_stretch
from src.utils.logger import get_logger

logger = get_logger(__name__)

TABLE_COLUMNS = ["dims", "family", "predicted", "constructed_measured", "exact", "exhausted"]


def dims_sweep(dims_max: Sequence[int], dims_min: int = 2) -> List[Tuple[int, ...]]:
    """
    Nondecreasing tuples (n_1 <= ... <= n_d) for d = 1..len(dims_max), with
    dims_min <= n_i <= dims_max[i].
    """
    if dims_min < 2:
        raise ValueError(f"--dims-min must be >= 2 (got {dims_min})")
    top = max(dims_max, default=dims_min)
    out = []
    for d in range(1, len(dims_max) + 1):
        for dims in combinations_with_replacement(range(dims_min, top + 1), d):
            if all(n <= cap for n, cap in zip(dims, dims_max)):
                out.append(dims)
    return out


def format_dims(dims: Sequence[int]) -> str:
    return "x".join(str(n) for n in dims)


def table_row(family: Family, dims: Sequence[int], budget: SolveBudget, jobs: int = 1) -> Dict[str, Any]:
    result = construct(family, dims)
    row: Dict[str, Any] = {
        "dims": format_dims(dims),
        "family": family.value,
        "predicted": result.predicted,
        "constructed_measured": max_stretch(result.graph, result.tree).value,
        "exact": None,
        "exhausted": False,
    }
    if result.graph.vertex_count <= budget.max_vertices:
        solved = exact_tree_stretch(result.graph, budget, jobs=jobs)
        row["exhausted"] = solved.exhausted
        if solved.exhausted:
            row["exact"] = solved.optimum
    label = format_factor_spec(factors_for_family(family, dims))
    logger.info(f"{label}: predicted {row['predicted']}, measured {row['constructed_measured']}, exact {row['exact']}")
    return row


def build_table(
    family: Family, dims_max: Sequence[int], dims_min: int, budget: SolveBudget, jobs: int = 1
) -> pd.DataFrame:
    rows = [table_row(family, dims, budget, jobs) for dims in dims_sweep(dims_max, dims_min)]
    df = pd.DataFrame(rows, columns=TABLE_COLUMNS)
    # nullable ints keep "4" rather than "4.0" next to empty cells
    df["exact"] = df["exact"].astype("Int64")
    return df
