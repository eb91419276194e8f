"""
CLI entry: gen / construct / eval / exact / verify / table / export. Run via
``python -m src.cli`` or the ``treestretch`` console script.

Exit codes: 0 success, 1 domain or I/O error (or a failed check), 2 usage error.
"""

import sys
from typing import Callable, Dict, Optional, Sequence

from src.cli.args import build_parser
from src.cli.construct_cmd import run_construct_command
from src.cli.eval_cmd import run_eval_command
from src.cli.exact_cmd import run_exact_command
from src.cli.export_cmd import run_export_command
from src.cli.gen_cmd import run_gen_command
from src.cli.io import UsageError
from src.cli.table_cmd import run_table_command
from src.cli.verify_cmd import run_verify_command
from src.utils.config import AppConfig, apply_dotenv, load_config
from src.utils.logger import get_logger

logger = get_logger(__name__)

COMMANDS: Dict[str, Callable[..., int]] = {
    "gen": run_gen_command,
    "construct": run_construct_command,
    "eval": run_eval_command,
    "exact": run_exact_command,
    "verify": run_verify_command,
    "table": run_table_command,
    "export": run_export_command,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    if args.command is None:
        parser.print_usage(sys.stderr)
        logger.error("No command specified. Use --help for usage information.")
        return 2

    apply_dotenv()
    try:
        cfg: AppConfig = load_config()
        return COMMANDS[args.command](args, cfg)
    except UsageError as e:
        parser.print_usage(sys.stderr)
        logger.error(f"{args.command}: {e}")
        return 2
    except (ValueError, OSError) as e:
        # ValueError covers GraphError, TreeError, ConfigError and JSON decode errors
        logger.error(f"{args.command}: {e}")
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
