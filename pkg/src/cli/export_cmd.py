"""Export subcommand: graph or tree as Graphviz DOT."""

from src.cli.io import read_json, resolve_graph, write_text
from src.export.dot import graph_to_dot, tree_to_dot
from src.tree.serialization import tree_from_json
from src.utils.config import AppConfig


def run_export_command(args, cfg: AppConfig) -> int:
    g = resolve_graph(args)
    if args.tree:
        dot = tree_to_dot(g, tree_from_json(g, read_json(args.tree)), center=args.center)
    else:
        dot = graph_to_dot(g, center=args.center)
    write_text(dot, args.out)
    return 0
