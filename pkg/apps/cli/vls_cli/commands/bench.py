"""`bench`: Gaussian-mixture benchmark against best-of-K K-means++ restarts."""

import argparse
from pathlib import Path

from core.settings import get_settings
from data.synthetic import gen_gaussian_mixture, grid_centers
from eval.benchmark import format_table, run_bench
from vls_cli.commands.options import add_algorithm_flags
from vls_cli.services.run_service import UsageError, build_config, positive_int


def register(subparsers: argparse._SubParsersAction) -> argparse.ArgumentParser:
    parser = subparsers.add_parser("bench", help="Benchmark on a synthetic Gaussian mixture")
    parser.add_argument("--centers", type=positive_int, default=5, help="Mixture centers (default: 5)")
    parser.add_argument("--sigma", type=float, default=0.05, help="Blob standard deviation (default: 0.05)")
    parser.add_argument(
        "--points-per-center", type=positive_int, default=2000, help="Points per blob (default: 2000)"
    )
    parser.add_argument("--data-seed", type=int, default=0, help="Seed for the mixture")
    add_algorithm_flags(parser, iters=100, sample_size=500)
    parser.add_argument("--seeds", type=positive_int, default=10, help="Runs per side, seeds 0..N-1")
    parser.add_argument("--restarts", type=positive_int, default=10, help="K-means++ restarts in the baseline")
    parser.add_argument("--out", type=Path, default=None, help="Directory for history and table CSVs")
    parser.add_argument("--ledger", default=None, help="SQLAlchemy URL of a run ledger")
    parser.set_defaults(handler=cmd_bench, command_parser=parser)
    return parser


def cmd_bench(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    try:
        cfg = build_config(args)
    except UsageError as e:
        parser.error(str(e))

    mixture = gen_gaussian_mixture(
        grid_centers(args.centers),
        args.sigma,
        args.points_per_center,
        args.data_seed,
        dataset_id=f"mixture{args.centers}",
    )
    s_max = cfg.size_bounds()[1]
    if s_max > mixture.dataset.rows:
        parser.error(f"sample size {s_max} exceeds the {mixture.dataset.rows} mixture points")

    out_dir = args.out or get_settings().output_dir / "bench"
    print("=" * 60)
    print(f"Benchmark: {cfg.algorithm.value} vs K-means++ x{args.restarts}")
    print(f"Dataset: {mixture.dataset.id} ({mixture.dataset.rows} x {mixture.dataset.cols}), P={cfg.clusters}")
    print("=" * 60)

    report = run_bench(
        mixture.dataset,
        cfg,
        seeds=range(args.seeds),
        restarts=args.restarts,
        out_dir=out_dir,
        ledger_url=args.ledger,
        suite=mixture.dataset.id,
    )
    print(format_table(report))
    print(f"\nTable written to {report.table_path}")
    return 0
