"""
Verify subcommand: per tree, the duality check, the incidence identity and
stretch <= diameter; Hamming graphs also get a successor certificate, grids the
boundary spot-check. With --certificate, re-check that certificate instead.
"""

from typing import Any, Dict, List

from src.cli.io import UsageError, read_json, resolve_graph, write_json
from src.graph.product import ProductGraph
from src.tree.metrics import incidence_counts, max_stretch, tree_diameter
from src.tree.sampling import sample_spanning_trees
from src.tree.serialization import tree_from_json
from src.tree.spanning_tree import SpanningTree
from src.utils.config import AppConfig
from src.utils.logger import get_logger
from src.verifier.certificate import certificate_from_json, certificate_to_json, check_certificate
from src.verifier.duality import duality_check
from src.verifier.witness import grid_boundary_witness, hamming_witness

logger = get_logger(__name__)


def _check_tree(g, t: SpanningTree) -> Dict[str, Any]:
    stretch = max_stretch(g, t).value
    diameter = tree_diameter(t)
    cut_side, cycle_side = incidence_counts(g, t)
    record: Dict[str, Any] = {
        "stretch": stretch,
        "diameter": diameter,
        "stretch_le_diameter": stretch <= diameter,
        "duality": duality_check(g, t),
        "incidence": [cut_side, cycle_side],
    }
    ok = record["stretch_le_diameter"] and record["duality"] and cut_side == cycle_side
    if isinstance(g, ProductGraph) and g.is_hamming:
        certificate = hamming_witness(g, t)
        check = check_certificate(g, t, certificate)
        record["certificate"] = {**certificate_to_json(certificate), "ok": check.ok}
        ok = ok and check.ok
    elif isinstance(g, ProductGraph) and g.is_grid:
        witness = grid_boundary_witness(g, t)
        record["boundary_witness"] = (
            None
            if witness is None
            else {
                "edge": list(witness.edge),
                "detour_length": witness.detour_length,
                "bound": witness.bound,
                "meets_bound": witness.meets_bound,
            }
        )
        ok = ok and (witness is None or witness.meets_bound)
    record["ok"] = ok
    return record


def run_verify_command(args, cfg: AppConfig) -> int:
    g = resolve_graph(args)

    if args.certificate:
        if not args.tree:
            raise UsageError("--certificate needs --tree")
        t = tree_from_json(g, read_json(args.tree))
        check = check_certificate(g, t, certificate_from_json(read_json(args.certificate)))
        write_json({"graph": g.describe(), "ok": check.ok, "reason": check.reason}, args.out)
        if not check.ok:
            logger.warning(f"certificate rejected: {check.reason}")
        return 0 if check.ok else 1

    if args.tree:
        trees: List[SpanningTree] = [tree_from_json(g, read_json(args.tree))]
    else:
        samples = args.samples if args.samples is not None else cfg.sampling.samples
        seed = args.seed if args.seed is not None else cfg.sampling.seed
        if samples < 1:
            raise ValueError(f"--samples must be >= 1 (got {samples})")
        trees = list(sample_spanning_trees(g, samples, seed=seed))
        logger.info(f"Sampled {samples} random spanning trees of {g.describe()} (seed {seed})")

    results = [_check_tree(g, t) for t in trees]
    all_ok = all(r["ok"] for r in results)
    if not all_ok:
        failed = sum(not r["ok"] for r in results)
        logger.warning(f"{g.describe()}: {failed} of {len(results)} trees failed verification")
    write_json({"graph": g.describe(), "trees": len(results), "all_ok": all_ok, "results": results}, args.out)
    return 0 if all_ok else 1
