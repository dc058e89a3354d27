"""Best-improvement local search over a pluggable neighbor step."""

import logging
from dataclasses import dataclass

from vls.landscape import Landscape
from vls.structures import NeighborStep, Solution

logger = logging.getLogger(__name__)


def best_improvement_local_search(
    x: Solution,
    landscape: Landscape,
    step: NeighborStep,
    max_steps: int | None = None,
) -> Solution:
    """Repeatedly move to the best neighbor while it is strictly better.

    Terminates at a solution no neighbor strictly improves on, or after
    `max_steps` moves.
    """
    value = landscape.objective(x)
    moves = 0
    while max_steps is None or moves < max_steps:
        candidate = step.best_neighbor(x, landscape)
        candidate_value = landscape.objective(candidate)
        if not candidate_value < value:
            break
        x, value = candidate, candidate_value
        moves += 1
    logger.debug("Local search stopped after %d improving moves at %.6g", moves, value)
    return x


@dataclass
class BestImprovementSearcher:
    """Engine local searcher wrapping a neighbor step."""

    step: NeighborStep
    max_steps: int | None = None

    def search(self, x: Solution, landscape: Landscape) -> Solution:
        return best_improvement_local_search(x, landscape, self.step, self.max_steps)
