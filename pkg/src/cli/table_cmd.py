"""Table subcommand: sweep a family over dimension ranges and write the CSV."""

from src.cli.io import resolve_budget, resolve_jobs, write_text
from src.cli.table_pipeline import build_table
from src.graph.factor_spec import parse_dims
from src.graph.types import Family
from src.utils.config import AppConfig
from src.utils.logger import get_logger

logger = get_logger(__name__)


def run_table_command(args, cfg: AppConfig) -> int:
    family = Family(args.family)
    budget = resolve_budget(args, cfg)
    df = build_table(family, parse_dims(args.dims_max), args.dims_min, budget, resolve_jobs(args, cfg))
    mismatches = df[df["exact"].notna() & (df["exact"] != df["predicted"])]
    if not mismatches.empty:
        logger.warning(f"exact value differs from the prediction for {list(mismatches['dims'])}")
    write_text(df.to_csv(index=False), args.out)
    return 0
