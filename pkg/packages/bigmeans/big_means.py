"""Big-means: K-means on a fresh uniform sample per iteration, keep the best.

Each iteration draws a sample of size s, reseeds degenerate centroids with
K-means++ on it, runs K-means from the incumbent and accepts the result iff
its sample objective is strictly below the recorded best f_hat. The final
centroids label the full dataset.
"""

import logging
import math
import time

from bigmeans.board import BestBoard
from bigmeans.common import WorkerClock, check_sizes, finalize, local_step
from bigmeans.structures import (
    Algorithm,
    BigMeansConfig,
    ClusteringResult,
    ImprovementHistory,
    WorkerOutcome,
)
from bigmeans.workers import worker_pool
from core.models import HistoryRow, Phase, RunRecord
from mssc.centroids import CentroidSet
from mssc.dataset import Dataset
from mssc.objective import landscape_objective
from mssc.seeding import repair_degenerate
from vls.streams import RngStreams

logger = logging.getLogger(__name__)


def big_means_worker(dataset: Dataset, cfg: BigMeansConfig, worker: int, board: BestBoard) -> WorkerOutcome:
    s = cfg.sample_size
    assert s is not None
    rngs = RngStreams(cfg.seed, worker)
    clock = WorkerClock(cfg)
    record = RunRecord()
    history = ImprovementHistory()

    centroids = CentroidSet.all_degenerate(cfg.clusters, dataset.cols)
    f_hat = float("inf")
    t = 0
    while not clock.exhausted(t):
        sample = dataset.draw_sample(s, rngs.sampling)
        points = dataset.values[sample.indices]
        seeded = repair_degenerate(centroids, points, rngs.init)
        centroids = seeded.centroids
        record.seeding_fallbacks += int(seeded.fallback)

        step = local_step(points, centroids, cfg)
        reference = f_hat
        if cfg.reevaluate_incumbent and math.isfinite(f_hat):
            reference = landscape_objective(centroids, points)
        improved = step.value < reference
        if improved:
            centroids, f_hat = step.candidate, step.value
            history.add(t, s, f_hat)
            board.offer(worker, centroids, f_hat)
        else:
            record.unsuccessful_iterations += 1

        record.rows.append(
            HistoryRow(
                t=t,
                phase=Phase.DATA,
                k=0,
                sample_size=s,
                objective=f_hat,
                improved=improved,
                elapsed_ms=clock.elapsed_ms(),
            )
        )
        t += 1

    return WorkerOutcome(worker, centroids, f_hat, record, history)


def big_means(dataset: Dataset, cfg: BigMeansConfig) -> ClusteringResult:
    started = time.perf_counter()
    check_sizes(dataset, cfg, Algorithm.BIGMEANS)
    logger.info(
        "Big-means on %r: m=%d, p=%d, s=%d, T=%s, workers=%d",
        dataset.id,
        dataset.rows,
        cfg.clusters,
        cfg.sample_size,
        cfg.iterations,
        cfg.workers,
    )
    board = worker_pool(
        lambda worker, board: big_means_worker(dataset, cfg, worker, board),
        cfg.workers,
        cfg.seed,
    )
    best = board.best_local()
    assert best is not None
    return finalize(dataset, cfg, board, best.centroids, best.owner, started)
