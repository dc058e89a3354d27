"""Engine state, plug-in protocols and run outcome of the search loop.

This module defines:
- Plug-in protocols the engine is parameterized by (local search,
  transition between landscapes, acceptance)
- The mutable state observed between iterations
- The outcome returned by a run
"""

from collections.abc import Callable
from dataclasses import dataclass, field
from typing import Any, Protocol

import numpy as np

from core.models import HistoryRow, Phase, RunRecord
from vls.landscape import Landscape

Solution = Any


# =============================================================================
# Plug-in Protocols
# =============================================================================


class LocalSearcher(Protocol):
    """Moves a solution to a local minimum of the landscape's objective."""

    def search(self, x: Solution, landscape: Landscape) -> Solution: ...


class NeighborStep(Protocol):
    """Returns the best solution in the solution neighborhood of x."""

    def best_neighbor(self, x: Solution, landscape: Landscape) -> Solution: ...


class TransitionOperator(Protocol):
    """Translates a solution feasible in one landscape onto another."""

    def transition(
        self,
        x: Solution,
        landscape: Landscape,
        new_landscape: Landscape,
        rng: np.random.Generator,
    ) -> Solution: ...


class AcceptanceCriterion(Protocol):
    """Decides whether x_new replaces x and what the recorded best value becomes."""

    def decide(
        self,
        x: Solution,
        x_new: Solution,
        new_landscape: Landscape,
        incumbent_value: float,
    ) -> tuple[bool, float]: ...


@dataclass
class Plugins:
    local_searcher: LocalSearcher
    transition: TransitionOperator
    acceptance: AcceptanceCriterion | None = None


# =============================================================================
# State and Outcome
# =============================================================================


@dataclass
class EngineState:
    """Observable state between iterations."""

    t: int
    phase: Phase
    s_i: int
    k: int
    x: Solution
    landscape: Landscape
    f_hat: float
    unsuccessful: int = 0
    stall: int = 0


IterationObserver = Callable[[EngineState, HistoryRow], None]


@dataclass
class BvlsOutcome:
    solution: Solution
    landscape: Landscape
    objective: float
    record: RunRecord = field(default_factory=RunRecord)
