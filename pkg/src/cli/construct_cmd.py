"""Construct subcommand: optimal tree JSON with the predicted and measured stretch."""

from src.cli.io import write_json, write_text
from src.constructions import construct
from src.export.dot import tree_to_dot
from src.graph.factor_spec import parse_dims
from src.graph.types import Family
from src.tree.metrics import max_stretch
from src.tree.serialization import tree_to_json
from src.utils.config import AppConfig
from src.utils.logger import get_logger

logger = get_logger(__name__)


def run_construct_command(args, cfg: AppConfig) -> int:
    result = construct(Family(args.family), parse_dims(args.dims))
    measured = max_stretch(result.graph, result.tree).value
    if measured != result.predicted:
        logger.warning(f"{result.graph.describe()}: measured stretch {measured} != predicted {result.predicted}")
    else:
        logger.info(f"{result.graph.describe()}: stretch {measured} as predicted")

    # tree_from_json ignores the extra keys, so this file is also a plain tree descriptor
    data = tree_to_json(result.tree)
    data.update(
        {
            "family": result.family.value,
            "dims": list(result.graph.sizes),
            "center": result.center,
            "predicted": result.predicted,
            "measured": measured,
            "dimension_order": list(result.dimension_order),
        }
    )
    write_json(data, args.out)
    if args.dot:
        write_text(tree_to_dot(result.graph, result.tree, center=result.center), args.dot)
    return 0
