"""argparse definitions for ``python -m src.cli``."""

import argparse
from typing import Optional, Sequence

FAMILIES = ("hamming", "grid")


def _add_graph_source(parser: argparse.ArgumentParser, *, allow_file: bool = True) -> None:
    parser.add_argument("--spec", type=str, help='Factor spec string, e.g. "K4xK5" or "P3xP4xP4"')
    parser.add_argument("--family", type=str, choices=FAMILIES, help="Single-kind product family")
    parser.add_argument("--dims", type=str, help="Comma-separated factor sizes for --family, e.g. 4,5")
    if allow_file:
        parser.add_argument("--graph", type=str, help="Graph JSON file (factor descriptor or n/edges form)")


def _add_budget(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--budget-trees", type=int, help="Stop after this many complete trees (default: config)")
    parser.add_argument("--budget-seconds", type=float, help="Wall-clock cap in seconds (default: config)")
    parser.add_argument("--max-vertices", type=int, help="Largest graph searched exhaustively (default: config)")
    parser.add_argument("--jobs", type=int, help="Worker processes for the exact search (default: config)")


def _add_out(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", type=str, help="Output file (default: stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="treestretch",
        description="Optimal minimum-stretch spanning trees of Hamming graphs and grids",
    )
    subparsers = parser.add_subparsers(dest="command", help="Command to execute")

    gen_parser = subparsers.add_parser("gen", help="Write a graph JSON descriptor")
    _add_graph_source(gen_parser, allow_file=False)
    gen_parser.add_argument("--edge-list", action="store_true", help="Also write the explicit n/edges form")
    _add_out(gen_parser)

    construct_parser = subparsers.add_parser("construct", help="Build the optimal tree of a product family")
    construct_parser.add_argument("--family", type=str, choices=FAMILIES, required=True, help="Product family")
    construct_parser.add_argument("--dims", type=str, required=True, help="Comma-separated factor sizes")
    construct_parser.add_argument("--dot", type=str, help="Also write a DOT rendering of the tree to this file")
    _add_out(construct_parser)

    eval_parser = subparsers.add_parser("eval", help="Stretch, congestion and diameter of a tree")
    eval_parser.add_argument("--graph", type=str, required=True, help="Graph JSON file")
    eval_parser.add_argument("--tree", type=str, required=True, help="Tree JSON file")
    _add_out(eval_parser)

    exact_parser = subparsers.add_parser("exact", help="Exact tree-stretch or tree k-spanner decision")
    _add_graph_source(exact_parser)
    exact_parser.add_argument("--k", type=int, help="Decide whether a tree k-spanner exists instead of optimizing")
    _add_budget(exact_parser)
    _add_out(exact_parser)

    verify_parser = subparsers.add_parser("verify", help="Lower-bound certificates and duality checks")
    _add_graph_source(verify_parser)
    verify_parser.add_argument("--tree", type=str, help="Tree JSON file (default: sample random trees)")
    verify_parser.add_argument("--certificate", type=str, help="Certificate JSON file to re-check against --tree")
    verify_parser.add_argument("--samples", type=int, help="Random spanning trees to sample (default: config)")
    verify_parser.add_argument("--seed", type=int, help="Seed for random spanning trees (default: config)")
    _add_out(verify_parser)

    table_parser = subparsers.add_parser("table", help="CSV of predicted, constructed and exact values")
    table_parser.add_argument("--family", type=str, choices=FAMILIES, required=True, help="Product family")
    table_parser.add_argument("--dims-max", type=str, required=True, help="Per-position maximum sizes, e.g. 3,3,3")
    table_parser.add_argument("--dims-min", type=int, default=2, help="Smallest factor size (default: 2)")
    _add_budget(table_parser)
    _add_out(table_parser)

    export_parser = subparsers.add_parser("export", help="Render a graph or tree as Graphviz DOT")
    _add_graph_source(export_parser)
    export_parser.add_argument("--tree", type=str, help="Tree JSON file; tree edges solid, cotree edges dotted")
    export_parser.add_argument("--center", type=int, help="Vertex drawn filled (e.g. the construction center)")
    _add_out(export_parser)

    return parser


def parse_args(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    """Parse command line arguments."""
    return build_parser().parse_args(argv)
