"""
File and stdout helpers shared by the subcommands, plus resolution of the
graph-source flags (--graph / --spec / --family + --dims) and budget flags.
"""

import json
import sys
from pathlib import Path
from typing import Any, Optional

from src.graph.factor_spec import graph_for_family, graph_from_spec, parse_dims
from src.graph.serialization import AnyGraph, graph_from_json
from src.graph.types import Family
from src.solver.types import SolveBudget
from src.utils.config import AppConfig
from src.utils.logger import get_logger

logger = get_logger(__name__)


class UsageError(Exception):
    """Flag combination the parser cannot express; the CLI exits 2."""


def read_json(path: str) -> Any:
    with open(path, encoding="utf-8") as f:
        return json.load(f)


def write_text(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
        logger.info(f"Wrote {out}")
    else:
        sys.stdout.write(text)


def write_json(data: Any, out: Optional[str]) -> None:
    write_text(json.dumps(data, indent=2) + "\n", out)


def resolve_graph(args) -> AnyGraph:
    """Graph from --graph, --spec, or --family with --dims (checked in that order)."""
    if getattr(args, "graph", None):
        return graph_from_json(read_json(args.graph))
    if args.spec:
        return graph_from_spec(args.spec)
    if args.family and args.dims:
        return graph_for_family(Family(args.family), parse_dims(args.dims))
    raise UsageError("a graph is required: use --graph FILE, --spec K4xK5, or --family with --dims")


def resolve_budget(args, cfg: AppConfig) -> SolveBudget:
    """CLI flags over config values."""
    return SolveBudget(
        max_vertices=args.max_vertices if args.max_vertices is not None else cfg.solver.max_vertices,
        max_trees_enumerated=args.budget_trees if args.budget_trees is not None else cfg.solver.max_trees,
        time_cap=args.budget_seconds if args.budget_seconds is not None else cfg.solver.time_cap_seconds,
    )


def resolve_jobs(args, cfg: AppConfig) -> int:
    jobs = args.jobs if args.jobs is not None else cfg.solver.jobs
    if jobs < 1:
        raise ValueError(f"--jobs must be >= 1 (got {jobs})")
    return jobs
