"""Single-machine pool of independent search workers."""

import concurrent.futures
import logging
from collections.abc import Callable

from bigmeans.board import BestBoard
from bigmeans.structures import WorkerOutcome

logger = logging.getLogger(__name__)

WorkerRun = Callable[[int, BestBoard], WorkerOutcome]


def worker_pool(
    run_closure: WorkerRun, workers: int, seed: int, board: BestBoard | None = None
) -> BestBoard:
    """Run `workers` independent closures and collect their outcomes.

    Each closure receives its worker id (which selects its random streams
    under the shared root seed) and the board to publish improvements to. A
    failing worker is logged and recorded on the board; the survivors'
    outcomes are kept in `board.outcomes`, ordered by worker id.
    """
    if workers < 1:
        raise ValueError(f"worker count must be at least 1, got {workers}")
    board = board or BestBoard()
    outcomes = board.outcomes

    def _run(worker: int) -> WorkerOutcome:
        logger.info("Starting worker %d (seed %d)", worker, seed)
        outcome = run_closure(worker, board)
        board.publish_local(worker, outcome.centroids, outcome.objective)
        logger.info("Worker %d finished: objective=%.6g", worker, outcome.objective)
        return outcome

    if workers == 1:
        try:
            outcomes[0] = _run(0)
        except Exception as e:
            logger.error("Worker 0 failed: %s", e)
            board.record_failure(0, e)
    else:
        with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as executor:
            future_to_worker = {executor.submit(_run, w): w for w in range(workers)}
            for future in concurrent.futures.as_completed(future_to_worker):
                worker = future_to_worker[future]
                try:
                    outcomes[worker] = future.result()
                except Exception as e:
                    logger.error("Worker %d failed: %s", worker, e)
                    board.record_failure(worker, e)

    if not outcomes:
        raise RuntimeError(f"all {workers} workers failed: {board.failures}")
    board.outcomes = dict(sorted(outcomes.items()))
    return board
