"""Eval subcommand: stretch, congestion, diameter and stretch histogram of a given tree."""

from src.cli.io import read_json, write_json
from src.graph.serialization import graph_from_json
from src.tree.metrics import max_congestion, max_stretch, stretch_histogram, tree_diameter
from src.tree.serialization import tree_from_json
from src.utils.config import AppConfig
from src.utils.logger import get_logger

logger = get_logger(__name__)


def run_eval_command(args, cfg: AppConfig) -> int:
    g = graph_from_json(read_json(args.graph))
    t = tree_from_json(g, read_json(args.tree))
    stretch = max_stretch(g, t)
    congestion = max_congestion(g, t)
    diameter = tree_diameter(t)
    logger.info(f"{g.describe()}: stretch {stretch.value}, congestion {congestion.value}, diameter {diameter}")
    write_json(
        {
            "graph": g.describe(),
            "stretch": stretch.to_json(),
            "congestion": congestion.to_json(),
            "diameter": diameter,
            "stretch_histogram": {str(k): v for k, v in stretch_histogram(g, t).items()},
        },
        args.out,
    )
    return 0
