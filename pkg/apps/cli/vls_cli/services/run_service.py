"""Orchestration behind the subcommands: configs, runs and result documents."""

import argparse
import logging
from pathlib import Path

from bigmeans import RUNNERS
from bigmeans.structures import Algorithm, BigMeansConfig, ClusteringResult
from core.settings import get_settings
from data.results import ResultDocument, write_result
from mssc.dataset import Dataset

logger = logging.getLogger(__name__)


class UsageError(ValueError):
    """Invalid flag combination; the CLI exits with status 2."""


def parse_span(text: str) -> tuple[int, int]:
    """Parse 'LO:HI' into two integers."""
    try:
        lo, hi = (int(part) for part in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected LO:HI, got {text!r}") from None
    return lo, hi


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def build_config(args: argparse.Namespace) -> BigMeansConfig:
    """BigMeansConfig from parsed flags; invalid combinations raise UsageError."""
    algorithm = Algorithm(args.algo)
    if args.sample_range is not None and algorithm is not Algorithm.BIGOPTIMA:
        raise UsageError(f"--sample-range is only valid with --algo bigoptima, not {algorithm.value}")
    if args.sample_size is None and args.sample_range is None:
        raise UsageError("one of --sample-size or --sample-range is required")
    if getattr(args, "shake_range", None) is not None and algorithm is not Algorithm.BIGVNS:
        raise UsageError("--shake-range is only valid with --algo bigvns")
    try:
        return BigMeansConfig(
            algorithm=algorithm,
            clusters=args.clusters,
            sample_size=None if args.sample_range is not None else args.sample_size,
            sample_range=args.sample_range,
            iterations=args.iters,
            max_seconds=args.max_seconds,
            seed=getattr(args, "seed", 0),
            workers=args.workers,
            shake_range=getattr(args, "shake_range", None),
            phase_iterations=args.phase_iterations,
            reevaluate_incumbent=getattr(args, "reevaluate", False),
            final_polish=getattr(args, "polish", False),
        )
    except ValueError as e:
        raise UsageError(str(e)) from e


def run_clustering(dataset: Dataset, cfg: BigMeansConfig) -> ClusteringResult:
    s_min, s_max = cfg.size_bounds()
    if s_max > dataset.rows:
        raise UsageError(f"sample size {s_max} exceeds the {dataset.rows} points of the dataset")
    return RUNNERS[cfg.algorithm](dataset, cfg)


def build_document(
    result: ClusteringResult,
    dataset: Dataset,
    cfg: BigMeansConfig,
    source: str,
    omit_timings: bool = False,
) -> ResultDocument:
    history = result.record.rows
    wall_seconds = result.wall_seconds
    if omit_timings:
        history = [row.model_copy(update={"elapsed_ms": 0.0}) for row in history]
        wall_seconds = 0.0
    return ResultDocument(
        algorithm=cfg.algorithm.value,
        config=cfg.model_dump(mode="json"),
        dataset=source,
        rows=dataset.rows,
        cols=dataset.cols,
        centroids=result.centroids.coords.tolist(),
        objective=result.objective,
        history=history,
        seed=cfg.seed,
        wall_seconds=wall_seconds,
        s_opt=result.s_opt,
        seeding_fallbacks=sum(record.seeding_fallbacks for record in result.worker_records),
        unsuccessful_iterations=result.record.unsuccessful_iterations,
    )


def default_output(dataset: Dataset, cfg: BigMeansConfig) -> Path:
    return get_settings().output_dir / f"{dataset.id}_{cfg.algorithm.value}.json"


def save_document(doc: ResultDocument, result: ClusteringResult, out_path: Path) -> Path:
    path = write_result(doc, out_path, labels=result.labels.labels)
    logger.info("Wrote %s", path)
    return path
