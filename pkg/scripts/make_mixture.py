#!/usr/bin/env python3
"""
Mixture Dataset Script

Writes a Gaussian-mixture dataset on a square grid of centers, for use with
`vls-bench cluster --data ...`. A second file next to it holds the true
component of every point.

Usage:
    poetry run python scripts/make_mixture.py --centers 5 --points-per-center 2000 --out mock/mixture5.csv
"""

import argparse
import sys
from pathlib import Path

# Add packages to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent / "packages"))

from data.loaders import save_dataset
from data.results import write_labels
from data.synthetic import gen_gaussian_mixture, grid_centers


def main() -> int:
    parser = argparse.ArgumentParser(description="Write a Gaussian-mixture dataset file")
    parser.add_argument("--centers", type=int, default=5, help="Number of centers (default: 5)")
    parser.add_argument("--spacing", type=float, default=1.0, help="Grid spacing (default: 1.0)")
    parser.add_argument("--sigma", type=float, default=0.05, help="Blob standard deviation (default: 0.05)")
    parser.add_argument("--points-per-center", type=int, default=2000, help="Points per center")
    parser.add_argument("--seed", type=int, default=0, help="Random seed")
    parser.add_argument("--format", choices=["csv", "whitespace"], default="csv")
    parser.add_argument("--out", type=Path, required=True, help="Output dataset file")
    args = parser.parse_args()

    mixture = gen_gaussian_mixture(
        grid_centers(args.centers, args.spacing),
        args.sigma,
        args.points_per_center,
        args.seed,
        dataset_id=args.out.stem,
    )
    path = save_dataset(mixture.dataset, args.out, fmt=args.format)
    truth = write_labels(mixture.labels, path.with_name(path.stem + ".truth.txt"))

    print(f"Wrote {mixture.dataset.rows} x {mixture.dataset.cols} points to {path}")
    print(f"True components in {truth}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
