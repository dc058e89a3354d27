"""Configuration and result models for the Big-means family.

This module defines:
- BigMeansConfig, the parameter block shared by the three algorithms
- ImprovementHistory, the per-worker log of improving iterations
- Worker and clustering results
"""

from dataclasses import dataclass, field
from enum import Enum
try:
    from typing import Self
except ImportError:  # Python < 3.11
    from typing_extensions import Self

from pydantic import BaseModel, ConfigDict, Field, PositiveFloat, PositiveInt, model_validator

from core.models import RunRecord
from mssc.centroids import CentroidSet, LabelAssignment


# =============================================================================
# Configuration
# =============================================================================


class Algorithm(str, Enum):
    BIGMEANS = "bigmeans"
    BIGOPTIMA = "bigoptima"
    BIGVNS = "bigvns"


class BigMeansConfig(BaseModel):
    """Parameters of one Big-means, BigOptimaS3 or BigVNSClust run.

    Big-means and BigVNSClust take a fixed sample_size. BigOptimaS3 takes a
    sample_range (a sample_size collapses to the range [s, s]).
    """

    model_config = ConfigDict(frozen=True)

    algorithm: Algorithm = Algorithm.BIGMEANS
    clusters: PositiveInt = Field(description="Number of clusters p")
    sample_size: PositiveInt | None = None
    sample_range: tuple[PositiveInt, PositiveInt] | None = None
    iterations: PositiveInt | None = Field(default=None, description="Iteration budget T")
    max_seconds: PositiveFloat | None = None
    seed: int = Field(default=0, ge=0, lt=2**64)
    workers: PositiveInt = 1
    shake_range: tuple[int, int] | None = Field(
        default=None, description="Solution-shake powers [k_min, k_max] (bigvns only)"
    )
    phase_iterations: PositiveInt = Field(
        default=10, description="Iterations per data phase S1 (bigoptima only)"
    )
    reevaluate_incumbent: bool = Field(
        default=False,
        description="Compare against the incumbent re-evaluated on the new sample",
    )
    final_polish: bool = Field(default=False, description="Full-data K-means on the final centroids")
    kmeans_tol: PositiveFloat | None = None
    kmeans_max_iter: PositiveInt | None = None

    @model_validator(mode="after")
    def _check_algorithm_fields(self) -> Self:
        if self.iterations is None and self.max_seconds is None:
            raise ValueError("set iterations, max_seconds or both")
        if self.algorithm is Algorithm.BIGOPTIMA:
            if self.sample_range is None and self.sample_size is None:
                raise ValueError("bigoptima needs sample_range")
            if self.sample_range is not None and self.sample_size is not None:
                raise ValueError("give sample_range or sample_size, not both")
        else:
            if self.sample_range is not None:
                raise ValueError(f"sample_range is only valid for bigoptima, not {self.algorithm.value}")
            if self.sample_size is None:
                raise ValueError(f"{self.algorithm.value} needs sample_size")
        if self.sample_range is not None and self.sample_range[0] > self.sample_range[1]:
            raise ValueError(f"sample_range {self.sample_range} has s_min > s_max")
        if self.shake_range is not None:
            if self.algorithm is not Algorithm.BIGVNS:
                raise ValueError("shake_range is only valid for bigvns")
            lo, hi = self.shake_range
            if not 0 <= lo <= hi <= self.clusters:
                raise ValueError(f"shake_range {self.shake_range} must satisfy 0 <= k_min <= k_max <= p")
        return self

    def size_bounds(self) -> tuple[int, int]:
        if self.sample_range is not None:
            return self.sample_range
        assert self.sample_size is not None
        return self.sample_size, self.sample_size

    def solution_shake_bounds(self) -> tuple[int, int]:
        if self.shake_range is not None:
            return self.shake_range
        return 1, max(1, self.clusters // 2)


# =============================================================================
# Histories and Results
# =============================================================================


class ImprovementEvent(BaseModel):
    t: int
    sample_size: int
    objective: float


class ImprovementHistory(BaseModel):
    """Improving acceptances of one worker, in iteration order."""

    events: list[ImprovementEvent] = Field(default_factory=list)

    def add(self, t: int, sample_size: int, objective: float) -> None:
        self.events.append(ImprovementEvent(t=t, sample_size=sample_size, objective=objective))

    def sizes(self) -> list[int]:
        return [event.sample_size for event in self.events]

    def is_decreasing(self) -> bool:
        return all(cur.objective < prev.objective for prev, cur in zip(self.events, self.events[1:]))


@dataclass
class WorkerOutcome:
    worker: int
    centroids: CentroidSet
    objective: float
    record: RunRecord
    history: ImprovementHistory = field(default_factory=ImprovementHistory)


@dataclass
class ClusteringResult:
    """Final centroids, full-data labels and objective, plus per-worker traces."""

    algorithm: Algorithm
    centroids: CentroidSet
    labels: LabelAssignment
    objective: float
    record: RunRecord
    worker_records: list[RunRecord] = field(default_factory=list)
    best_worker: int = 0
    s_opt: int | None = None
    wall_seconds: float = 0.0
