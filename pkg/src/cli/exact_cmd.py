"""Exact subcommand: solver oracle under the configured budget."""

from src.cli.io import resolve_budget, resolve_graph, resolve_jobs, write_json
from src.solver.exact import exact_tree_stretch, k_spanner_decision
from src.utils.config import AppConfig


def run_exact_command(args, cfg: AppConfig) -> int:
    g = resolve_graph(args)
    budget = resolve_budget(args, cfg)
    if args.k is not None:
        data = k_spanner_decision(g, args.k, budget).to_json()
    else:
        data = exact_tree_stretch(g, budget, jobs=resolve_jobs(args, cfg)).to_json()
    write_json({"graph": g.describe(), **data}, args.out)
    return 0
