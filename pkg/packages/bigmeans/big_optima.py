"""BigOptimaS3: Big-means over a range of sample sizes with a final s_opt landscape.

Every data phase of S1 iterations starts by drawing its sample size uniformly
from [s_min, s_max] and keeps that size for the rest of the phase, redrawing
only membership. Acceptance is Big-means keep-the-best on the raw sample
objective, so the recorded f_hat never increases.
After the budget, the size seen most often among improving iterations
(s_opt) is realized once, every worker's incumbent is evaluated on it, and
the best one labels the full dataset.
"""

import logging
import math
import time
from collections import Counter

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
from vls.neighborhoods import FULL_RANGE, DataNeighborhood
from vls.streams import RngStreams, final_generator

logger = logging.getLogger(__name__)


def big_optima_worker(dataset: Dataset, cfg: BigMeansConfig, worker: int, board: BestBoard) -> WorkerOutcome:
    s_min, s_max = cfg.size_bounds()
    neighborhood = DataNeighborhood.size_range(s_min, s_max)
    rngs = RngStreams(cfg.seed, worker)
    clock = WorkerClock(cfg)
    record = RunRecord()
    history = ImprovementHistory()

    centroids = CentroidSet.all_degenerate(cfg.clusters, dataset.cols)
    f_hat = float("inf")
    size = s_max
    t = 0
    while not clock.exhausted(t):
        size = neighborhood.draw_size(size, FULL_RANGE, rngs.shaking)
        radius = int(neighborhood.radius(FULL_RANGE))
        for _ in range(cfg.phase_iterations):
            if clock.exhausted(t):
                break
            sample = dataset.draw_sample(size, rngs.sampling)
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
                history.add(t, size, f_hat)
                board.offer(worker, centroids, f_hat)
            else:
                record.unsuccessful_iterations += 1

            record.rows.append(
                HistoryRow(
                    t=t,
                    phase=Phase.DATA,
                    k=radius,
                    sample_size=size,
                    objective=f_hat,
                    improved=improved,
                    elapsed_ms=clock.elapsed_ms(),
                )
            )
            t += 1
            radius = 0

    return WorkerOutcome(worker, centroids, f_hat, record, history)


def choose_s_opt(histories: list[ImprovementHistory], s_max: int) -> int:
    """Most frequent size among improving iterations; ties go to the larger size."""
    counts = Counter(size for history in histories for size in history.sizes())
    if not counts:
        logger.warning("No improving iterations recorded; falling back to s_opt = s_max = %d", s_max)
        return s_max
    return max(counts, key=lambda size: (counts[size], size))


def big_optima_s3(dataset: Dataset, cfg: BigMeansConfig) -> ClusteringResult:
    started = time.perf_counter()
    s_min, s_max = check_sizes(dataset, cfg, Algorithm.BIGOPTIMA)
    logger.info(
        "BigOptimaS3 on %r: m=%d, p=%d, s in [%d, %d], S1=%d, T=%s, workers=%d",
        dataset.id,
        dataset.rows,
        cfg.clusters,
        s_min,
        s_max,
        cfg.phase_iterations,
        cfg.iterations,
        cfg.workers,
    )
    search_board = worker_pool(
        lambda worker, board: big_optima_worker(dataset, cfg, worker, board),
        cfg.workers,
        cfg.seed,
    )
    outcomes = search_board.outcomes
    s_opt = choose_s_opt([outcome.history for outcome in outcomes.values()], s_max)
    logger.info("Chose s_opt=%d", s_opt)

    sample = dataset.draw_sample(s_opt, final_generator(cfg.seed))
    points = dataset.values[sample.indices]
    final_board = BestBoard()
    final_board.outcomes = outcomes
    for worker, outcome in outcomes.items():
        value = landscape_objective(outcome.centroids, points)
        final_board.publish_local(worker, outcome.centroids, value)
        final_board.offer(worker, outcome.centroids, value)

    best = final_board.best
    if best is None:
        best_local = final_board.best_local()
        assert best_local is not None
        best = best_local
    return finalize(dataset, cfg, final_board, best.centroids, best.owner, started, s_opt=s_opt)
