"""Budgets and results of the exact solver."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Dict, Optional

from src.tree.serialization import tree_to_json
from src.tree.spanning_tree import SpanningTree
from src.utils.config import DEFAULT_MAX_TREES, DEFAULT_MAX_VERTICES, DEFAULT_TIME_CAP_SECONDS, SolverConfig

# Values of SolveResult.stop_reason / SpannerDecision.stop_reason
STOP_MAX_VERTICES = "max_vertices"
STOP_MAX_TREES = "max_trees"
STOP_TIME_CAP = "time_cap"


@dataclass(frozen=True)
class SolveBudget:
    """Caps on graph size, complete trees reached, and wall-clock seconds."""

    max_vertices: int = DEFAULT_MAX_VERTICES
    max_trees_enumerated: int = DEFAULT_MAX_TREES
    time_cap: float = DEFAULT_TIME_CAP_SECONDS

    def __post_init__(self) -> None:
        if self.max_vertices < 1 or self.max_trees_enumerated < 1 or self.time_cap <= 0:
            raise ValueError(f"solver budget values must be positive (got {self})")

    @classmethod
    def from_config(cls, cfg: SolverConfig) -> SolveBudget:
        return cls(
            max_vertices=cfg.max_vertices,
            max_trees_enumerated=cfg.max_trees,
            time_cap=cfg.time_cap_seconds,
        )


@dataclass(frozen=True)
class SolveResult:
    """
    Best tree found. ``optimum`` is the tree-stretch only when ``exhausted``;
    otherwise it is an upper bound and ``stop_reason`` names the cap that fired.
    """

    optimum: int
    optimal_tree: SpanningTree
    trees_enumerated: int
    exhausted: bool
    stop_reason: Optional[str] = None

    def to_json(self) -> Dict[str, Any]:
        return {
            "optimum": self.optimum,
            "optimal_tree": tree_to_json(self.optimal_tree),
            "trees_enumerated": self.trees_enumerated,
            "exhausted": self.exhausted,
            "stop_reason": self.stop_reason,
        }


@dataclass(frozen=True)
class SpannerDecision:
    """Tree k-spanner answer: True with a witness, False when refuted, None when the budget ran out."""

    k: int
    feasible: Optional[bool]
    witness: Optional[SpanningTree]
    trees_enumerated: int
    stop_reason: Optional[str] = None

    def to_json(self) -> Dict[str, Any]:
        return {
            "k": self.k,
            "feasible": self.feasible,
            "witness": tree_to_json(self.witness) if self.witness is not None else None,
            "trees_enumerated": self.trees_enumerated,
            "stop_reason": self.stop_reason,
        }
