"""Landscapes: (sample, formulation) pairs carrying their own objective.

The evaluation map builds a landscape from its two originators and stores
both, so the inverse map is exact.
"""

from collections.abc import Callable, Iterator, Sequence
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from core.errors import UnknownFormulationError
from core.models import Formulation, FormulationKind
from mssc.dataset import DatasetCatalog, SampleRef

Evaluator = Callable[[np.ndarray, Formulation, Any], float]
RegionDescriber = Callable[[Formulation, int], str]


class FormulationRegistry:
    """Ordered, fixed list F_1..F_r of formulations."""

    def __init__(self, formulations: Sequence[Formulation]):
        if not formulations:
            raise ValueError("formulation registry needs at least one formulation")
        ids = [f.id for f in formulations]
        if len(set(ids)) != len(ids):
            raise ValueError(f"formulation ids must be unique, got {ids}")
        self._formulations = tuple(formulations)
        self._positions = {f.id: i for i, f in enumerate(self._formulations)}

    @classmethod
    def mssc(cls, cluster_counts: Sequence[int]) -> "FormulationRegistry":
        return cls(
            [
                Formulation(id=i, kind=FormulationKind.MSSC, cluster_count=p)
                for i, p in enumerate(cluster_counts)
            ]
        )

    @property
    def r(self) -> int:
        return len(self._formulations)

    def __len__(self) -> int:
        return self.r

    def __iter__(self) -> Iterator[Formulation]:
        return iter(self._formulations)

    def get(self, formulation_id: int) -> Formulation:
        try:
            return self._formulations[self._positions[formulation_id]]
        except KeyError:
            raise UnknownFormulationError(formulation_id) from None

    def position(self, formulation: Formulation) -> int:
        """0-based position of a registered formulation."""
        if self.get(formulation.id) != formulation:
            raise UnknownFormulationError(formulation.id)
        return self._positions[formulation.id]

    def at(self, position: int) -> Formulation:
        return self._formulations[position]


@dataclass
class LandscapeSpace:
    """Everything needed to realize landscapes: data, formulations, evaluators."""

    catalog: DatasetCatalog
    registry: FormulationRegistry
    evaluators: dict[FormulationKind, Evaluator] = field(default_factory=dict)
    regions: dict[FormulationKind, RegionDescriber] = field(default_factory=dict)

    def register_kind(
        self, kind: FormulationKind, evaluator: Evaluator, region: RegionDescriber
    ) -> None:
        self.evaluators[kind] = evaluator
        self.regions[kind] = region


@dataclass(frozen=True, eq=False)
class Landscape:
    """A fixed objective over a feasible region, built from (sample, formulation)."""

    sample: SampleRef
    formulation: Formulation
    feasible_region: str
    points: np.ndarray = field(repr=False)
    space: LandscapeSpace = field(repr=False)

    @property
    def sample_size(self) -> int:
        return self.sample.size

    def objective(self, solution: Any) -> float:
        evaluate = self.space.evaluators[self.formulation.kind]
        return evaluate(self.points, self.formulation, solution)

    def originators(self) -> tuple[SampleRef, Formulation]:
        return self.sample, self.formulation


def evaluate_landscape(
    sample: SampleRef, formulation: Formulation, space: LandscapeSpace
) -> Landscape:
    """Realize the landscape of `formulation` on exactly the referenced sample."""
    space.registry.position(formulation)
    if formulation.kind not in space.evaluators:
        raise UnknownFormulationError(formulation.id)
    points = space.catalog.resolve(sample)
    points.setflags(write=False)
    region = space.regions[formulation.kind](formulation, points.shape[1])
    return Landscape(sample, formulation, region, points, space)


def inverse_landscape(landscape: Landscape) -> tuple[SampleRef, Formulation]:
    return landscape.originators()
