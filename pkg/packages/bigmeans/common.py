"""Pieces shared by the Big-means family: clocks, the sample step, final labeling."""

import logging
import time
from dataclasses import dataclass

import numpy as np

from bigmeans.board import BestBoard
from bigmeans.structures import Algorithm, BigMeansConfig, ClusteringResult
from mssc.centroids import CentroidSet
from mssc.dataset import Dataset
from mssc.kmeans import kmeans
from mssc.objective import assign_labels, landscape_objective, mssc_objective
from mssc.seeding import kmeanspp_init
from vls.streams import final_generator

logger = logging.getLogger(__name__)


class WorkerClock:
    """Iteration and wall-clock budget of one worker."""

    def __init__(self, cfg: BigMeansConfig):
        self.max_iterations = cfg.iterations
        self.max_seconds = cfg.max_seconds
        self.started = time.perf_counter()

    def elapsed_ms(self) -> float:
        return (time.perf_counter() - self.started) * 1000.0

    def exhausted(self, t: int) -> bool:
        if self.max_iterations is not None and t >= self.max_iterations:
            return True
        return self.max_seconds is not None and self.elapsed_ms() >= self.max_seconds * 1000.0


def check_sizes(dataset: Dataset, cfg: BigMeansConfig, expected: Algorithm) -> tuple[int, int]:
    if cfg.algorithm is not expected:
        raise ValueError(f"config is for {cfg.algorithm.value}, not {expected.value}")
    s_min, s_max = cfg.size_bounds()
    if s_max > dataset.rows:
        raise ValueError(f"sample size {s_max} exceeds the {dataset.rows} points of dataset {dataset.id!r}")
    if cfg.clusters > s_min:
        logger.warning(
            "p=%d exceeds sample size %d; K-means++ will seed with replacement", cfg.clusters, s_min
        )
    return s_min, s_max


@dataclass
class StepResult:
    candidate: CentroidSet
    value: float


def local_step(points: np.ndarray, start: CentroidSet, cfg: BigMeansConfig) -> StepResult:
    """K-means from `start` on the sample, valued with the lenient sample objective."""
    result = kmeans(points, start, cfg.kmeans_tol, cfg.kmeans_max_iter)
    return StepResult(result.centroids, landscape_objective(result.centroids, points))


def finalize(
    dataset: Dataset,
    cfg: BigMeansConfig,
    board: BestBoard,
    chosen: CentroidSet,
    best_worker: int,
    started: float,
    s_opt: int | None = None,
) -> ClusteringResult:
    """Label the full dataset against the chosen centroids."""
    centroids = chosen.with_flags_cleared()
    if centroids.has_degenerate:
        logger.warning("%d centroids never initialized; seeding them on the full data", len(centroids.degenerate_indices()))
        centroids = kmeanspp_init(dataset.values, 0, centroids, final_generator(cfg.seed)).centroids
    if cfg.final_polish:
        polished = kmeans(dataset.values, centroids, cfg.kmeans_tol, cfg.kmeans_max_iter)
        centroids = polished.centroids.with_flags_cleared()

    labels = assign_labels(centroids, dataset.values)
    objective = mssc_objective(centroids, dataset.values)
    records = [outcome.record for outcome in board.outcomes.values()]
    result = ClusteringResult(
        algorithm=cfg.algorithm,
        centroids=centroids,
        labels=labels,
        objective=objective,
        record=board.outcomes[best_worker].record,
        worker_records=records,
        best_worker=best_worker,
        s_opt=s_opt,
        wall_seconds=time.perf_counter() - started,
    )
    logger.info(
        "%s finished: full-data objective=%.6g, best worker=%d, %.3fs",
        cfg.algorithm.value,
        objective,
        best_worker,
        result.wall_seconds,
    )
    return result
