"""Shared best-solution board for parallel workers."""

import logging
import threading
from dataclasses import dataclass
from typing import TYPE_CHECKING

from mssc.centroids import CentroidSet

if TYPE_CHECKING:
    from bigmeans.structures import WorkerOutcome

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BoardEntry:
    centroids: CentroidSet
    objective: float
    owner: int


class BestBoard:
    """Best (centroids, objective, owner) seen by any worker.

    The cell is only ever replaced by a strictly smaller objective, so on an
    exact tie the first writer keeps it.
    """

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self._best: BoardEntry | None = None
        self.values: list[float] = []
        self.local: dict[int, BoardEntry] = {}
        self.failures: dict[int, str] = {}
        self.outcomes: dict[int, "WorkerOutcome"] = {}

    @property
    def best(self) -> BoardEntry | None:
        return self._best

    @property
    def objective(self) -> float:
        best = self._best
        return float("inf") if best is None else best.objective

    def offer(self, worker: int, centroids: CentroidSet, objective: float) -> bool:
        """Compare-and-replace; returns True if the board took the offer."""
        with self._lock:
            if not objective < self.objective:
                return False
            self._best = BoardEntry(centroids, objective, worker)
            self.values.append(objective)
            return True

    def publish_local(self, worker: int, centroids: CentroidSet, objective: float) -> None:
        with self._lock:
            self.local[worker] = BoardEntry(centroids, objective, worker)

    def record_failure(self, worker: int, error: BaseException) -> None:
        with self._lock:
            self.failures[worker] = f"{type(error).__name__}: {error}"

    def best_local(self) -> BoardEntry | None:
        """Lowest final local objective, lowest worker id on ties."""
        if not self.local:
            return None
        return min(self.local.values(), key=lambda entry: (entry.objective, entry.owner))
