"""Two-phase variable landscape search loop.

Each iteration shakes the incumbent landscape along the active phase's axis,
translates the incumbent onto the shaken landscape, runs local search there
and applies the phase's neighborhood change. Phases alternate after S_i
iterations (or after a run of non-improving iterations when a stall limit is
configured); a phase with S_i = 0 is skipped.
"""

import logging
import time

from core.errors import BudgetError
from core.models import ChangeScheme, HistoryRow, Phase, RunRecord, VlsConfig
from vls.acceptance import ShakenLandscapeImprovement
from vls.landscape import Landscape
from vls.neighborhood_change import neighborhood_change_cyclic, neighborhood_change_sequential
from vls.neighborhoods import LandscapeNeighborhood, shake_landscape
from vls.streams import RngStreams
from vls.structures import (
    BvlsOutcome,
    EngineState,
    IterationObserver,
    Plugins,
    Solution,
)

logger = logging.getLogger(__name__)


class _Clock:
    def __init__(self, config: VlsConfig):
        self.max_iterations = config.budget.max_iterations
        self.max_seconds = config.budget.max_seconds
        self.started = time.perf_counter()

    def elapsed(self) -> float:
        return time.perf_counter() - self.started

    def exhausted(self, t: int) -> bool:
        if self.max_iterations is not None and t >= self.max_iterations:
            return True
        return self.max_seconds is not None and self.elapsed() >= self.max_seconds


def _check_budget(config: VlsConfig) -> None:
    budget = config.budget
    if budget.max_iterations is None and budget.max_seconds is None:
        raise BudgetError("budget needs max_iterations or max_seconds")
    if (budget.max_iterations is not None and budget.max_iterations <= 0) or (
        budget.max_seconds is not None and budget.max_seconds <= 0
    ):
        raise BudgetError(f"budget must be positive, got {budget}")
    if sum(config.quotas) < 1:
        raise BudgetError("both phase quotas are zero")


def _phase_continues(state: EngineState, config: VlsConfig) -> bool:
    if config.phase_stall_limit is not None:
        return state.stall < config.phase_stall_limit
    return state.s_i < config.quotas[state.phase.index]


def run_bvls(
    x0: Solution,
    landscape0: Landscape,
    config: VlsConfig,
    plugins: Plugins,
    neighborhoods: tuple[LandscapeNeighborhood, LandscapeNeighborhood],
    *,
    worker: int = 0,
    observer: IterationObserver | None = None,
) -> BvlsOutcome:
    """Run the search from (x0, landscape0) until the budget is exhausted.

    The budget is checked before every iteration, so the history holds at
    most T rows.
    """
    _check_budget(config)
    rngs = RngStreams(config.seed, worker)
    acceptance = plugins.acceptance or ShakenLandscapeImprovement()
    fallbacks_before = getattr(plugins.transition, "fallbacks", 0)

    state = EngineState(
        t=0,
        phase=Phase.DATA,
        s_i=0,
        k=config.shake_bounds[0].k_min,
        x=x0,
        landscape=landscape0,
        f_hat=landscape0.objective(x0),
    )
    record = RunRecord()
    clock = _Clock(config)
    logger.info(
        "Starting search: quotas=%s, bounds=%s, budget=%s, seed=%d, worker=%d",
        config.quotas,
        [(b.k_min, b.k_max) for b in config.shake_bounds],
        config.budget,
        config.seed,
        worker,
    )

    while not clock.exhausted(state.t):
        i = state.phase.index
        if config.quotas[i] == 0:
            state.phase = Phase.from_index((i + 1) % 2)
            continue

        bounds = config.shake_bounds[i]
        scheme = config.change_schemes[i]
        state.k = bounds.k_min
        state.s_i = 0
        state.stall = 0

        while _phase_continues(state, config) and not clock.exhausted(state.t):
            k_used = state.k
            shaken = shake_landscape(state.landscape, neighborhoods, k_used, state.phase, rngs)
            x = plugins.transition.transition(state.x, state.landscape, shaken, rngs.init)
            x_new = plugins.local_searcher.search(x, shaken)
            improved, value = acceptance.decide(x, x_new, shaken, state.f_hat)

            if scheme is ChangeScheme.SEQUENTIAL:
                outcome = neighborhood_change_sequential(
                    x, x_new, state.landscape, shaken, k_used, bounds.k_min, bounds.k_max,
                    improves=improved,
                )
                state.x, state.landscape, state.k = outcome.x, outcome.landscape, outcome.k
            else:
                state.x, state.landscape = (x_new, shaken) if improved else (x, state.landscape)
                state.k = neighborhood_change_cyclic(k_used, bounds.k_min, bounds.k_max)

            if improved:
                state.f_hat = value
                state.stall = 0
            else:
                state.unsuccessful += 1
                state.stall += 1

            row = HistoryRow(
                t=state.t,
                phase=state.phase,
                k=k_used,
                sample_size=shaken.sample_size,
                objective=state.f_hat,
                improved=improved,
                elapsed_ms=clock.elapsed() * 1000.0,
                formulation_id=shaken.formulation.id,
            )
            record.rows.append(row)
            if observer is not None:
                observer(state, row)
            logger.debug("t=%d phase=%s k=%d f_hat=%.6g improved=%s", row.t, row.phase.value, k_used, state.f_hat, improved)

            state.s_i += 1
            state.t += 1

        state.phase = Phase.from_index((i + 1) % 2)

    record.unsuccessful_iterations = state.unsuccessful
    record.seeding_fallbacks = getattr(plugins.transition, "fallbacks", 0) - fallbacks_before
    logger.info("Search finished after %d iterations: f_hat=%.6g", state.t, state.f_hat)
    return BvlsOutcome(solution=state.x, landscape=state.landscape, objective=state.f_hat, record=record)
