"""`cluster`: run one algorithm on a dataset file and write the result document."""

import argparse
import logging
import sys
from pathlib import Path

from core.errors import VlsError
from data.loaders import load_dataset
from vls_cli.commands.options import add_algorithm_flags
from vls_cli.services.run_service import (
    UsageError,
    build_config,
    build_document,
    default_output,
    run_clustering,
    save_document,
)

logger = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction) -> argparse.ArgumentParser:
    parser = subparsers.add_parser("cluster", help="Cluster a dataset file")
    parser.add_argument("--data", type=Path, required=True, help="Dataset file")
    parser.add_argument("--format", choices=["csv", "whitespace"], default="csv", help="Dataset file format")
    parser.add_argument("--skip-header", action="store_true", help="Skip the first line of the file")
    add_algorithm_flags(parser, iters=100, sample_size=None)
    parser.add_argument("--seed", type=int, default=0, help="Root random seed")
    parser.add_argument("--out", type=Path, default=None, help="Result document path (.json)")
    parser.add_argument("--polish", action="store_true", help="Full-data K-means on the final centroids")
    parser.add_argument(
        "--reevaluate",
        action="store_true",
        help="Compare candidates with the incumbent re-evaluated on the same sample",
    )
    parser.add_argument(
        "--omit-timings",
        action="store_true",
        help="Zero timing fields so repeated runs give identical documents",
    )
    parser.set_defaults(handler=cmd_cluster, command_parser=parser)
    return parser


def cmd_cluster(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    try:
        cfg = build_config(args)
    except UsageError as e:
        parser.error(str(e))

    try:
        dataset = load_dataset(args.data, args.format, args.skip_header)
    except (VlsError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2

    try:
        result = run_clustering(dataset, cfg)
    except UsageError as e:
        parser.error(str(e))

    doc = build_document(result, dataset, cfg, str(args.data), omit_timings=args.omit_timings)
    out_path = save_document(doc, result, args.out or default_output(dataset, cfg))
    print(
        f"{cfg.algorithm.value}: objective={result.objective!r} "
        f"wall={doc.wall_seconds:.3f}s out={out_path}"
    )
    return 0
