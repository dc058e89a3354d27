"""BigVNSClust: Big-means with an extra shake of the incumbent centroids.

After the degenerate-centroid repair, k centroids chosen uniformly are swapped
for K-means++ draws on the current sample before K-means runs. The power k
advances cyclically every iteration whether or not the iteration improved.
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
from mssc.plugins import replace_centroids
from mssc.seeding import repair_degenerate
from vls.neighborhood_change import neighborhood_change_cyclic
from vls.streams import RngStreams

logger = logging.getLogger(__name__)


def big_vns_worker(dataset: Dataset, cfg: BigMeansConfig, worker: int, board: BestBoard) -> WorkerOutcome:
    s = cfg.sample_size
    assert s is not None
    k_min, k_max = cfg.solution_shake_bounds()
    rngs = RngStreams(cfg.seed, worker)
    clock = WorkerClock(cfg)
    record = RunRecord()
    history = ImprovementHistory()

    centroids = CentroidSet.all_degenerate(cfg.clusters, dataset.cols)
    f_hat = float("inf")
    k = k_min
    t = 0
    while not clock.exhausted(t):
        sample = dataset.draw_sample(s, rngs.sampling)
        points = dataset.values[sample.indices]
        seeded = repair_degenerate(centroids, points, rngs.init)
        centroids = seeded.centroids
        shaken, fallback = replace_centroids(centroids, points, k, rngs.shaking, rngs.init)
        record.seeding_fallbacks += int(seeded.fallback) + int(fallback)

        step = local_step(points, shaken, cfg)
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
                k=k,
                sample_size=s,
                objective=f_hat,
                improved=improved,
                elapsed_ms=clock.elapsed_ms(),
            )
        )
        k = neighborhood_change_cyclic(k, k_min, k_max)
        t += 1

    return WorkerOutcome(worker, centroids, f_hat, record, history)


def big_vns_clust(dataset: Dataset, cfg: BigMeansConfig) -> ClusteringResult:
    started = time.perf_counter()
    check_sizes(dataset, cfg, Algorithm.BIGVNS)
    k_min, k_max = cfg.solution_shake_bounds()
    logger.info(
        "BigVNSClust on %r: m=%d, p=%d, s=%d, k in [%d, %d], T=%s, workers=%d",
        dataset.id,
        dataset.rows,
        cfg.clusters,
        cfg.sample_size,
        k_min,
        k_max,
        cfg.iterations,
        cfg.workers,
    )
    board = worker_pool(
        lambda worker, board: big_vns_worker(dataset, cfg, worker, board),
        cfg.workers,
        cfg.seed,
    )
    best = board.best_local()
    assert best is not None
    return finalize(dataset, cfg, board, best.centroids, best.owner, started)
