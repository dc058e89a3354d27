"""Flags shared by the cluster and bench subcommands."""

import argparse

from bigmeans.structures import Algorithm
from vls_cli.services.run_service import parse_span, positive_int


def add_algorithm_flags(parser: argparse.ArgumentParser, iters: int, sample_size: int | None) -> None:
    parser.add_argument("--clusters", "-p", type=positive_int, required=True, help="Number of clusters P")
    parser.add_argument(
        "--algo",
        choices=[a.value for a in Algorithm],
        default=Algorithm.BIGMEANS.value,
        help="Algorithm to run (default: bigmeans)",
    )
    sizes = parser.add_mutually_exclusive_group()
    sizes.add_argument("--sample-size", type=positive_int, default=sample_size, help="Sample size S")
    sizes.add_argument("--sample-range", type=parse_span, metavar="LO:HI", help="Sample size range (bigoptima)")
    parser.add_argument("--iters", type=positive_int, default=iters, help=f"Iteration budget T (default: {iters})")
    parser.add_argument("--max-seconds", type=float, default=None, help="Wall-clock cap per worker")
    parser.add_argument("--workers", type=positive_int, default=1, help="Parallel workers W (default: 1)")
    parser.add_argument("--shake-range", type=parse_span, metavar="LO:HI", help="Solution-shake powers (bigvns)")
    parser.add_argument(
        "--phase-iterations", type=positive_int, default=10, help="Iterations per data phase (bigoptima)"
    )
