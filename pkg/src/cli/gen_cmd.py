"""Gen subcommand: factor spec -> graph JSON descriptor."""

from src.cli.io import resolve_graph, write_json
from src.graph.serialization import graph_to_json
from src.utils.config import AppConfig
from src.utils.logger import get_logger

logger = get_logger(__name__)


def run_gen_command(args, cfg: AppConfig) -> int:
    g = resolve_graph(args)
    logger.info(f"Generated {g.describe()}: {g.vertex_count} vertices, {len(g.edges)} edges")
    write_json(graph_to_json(g, include_edges=args.edge_list), args.out)
    return 0
