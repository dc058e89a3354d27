"""Neighborhood structures on the data and formulation axes, and shaking."""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Final, Literal, Protocol, TypeVar

import numpy as np

from core.errors import DegenerateNeighborhoodError
from core.models import Formulation, NeighborhoodAxis, NeighborhoodSpec, Phase
from vls.landscape import FormulationRegistry, Landscape, evaluate_landscape
from vls.streams import RngStreams

logger = logging.getLogger(__name__)

T = TypeVar("T")

FULL_RANGE: Final = -1
"""Shake power whose radius covers the whole admissible size range."""


class LandscapeNeighborhood(Protocol):
    spec: NeighborhoodSpec

    def shake(self, landscape: Landscape, k: int, rngs: RngStreams) -> Landscape: ...


def _pick(candidates: Sequence[T], rng: np.random.Generator) -> T:
    if len(candidates) == 1:
        return candidates[0]
    return candidates[int(rng.integers(len(candidates)))]


# =============================================================================
# Data axis
# =============================================================================


@dataclass(frozen=True)
class DataNeighborhood:
    """Samples whose size s' lies in [s_min, s_max] with |s - s'| <= radius(k).

    Membership of the new sample is redrawn uniformly without replacement on
    every shake, so k = 0 keeps the size but changes the points.
    """

    spec: NeighborhoodSpec
    s_min: int
    s_max: int

    def __post_init__(self) -> None:
        if self.spec.axis is not NeighborhoodAxis.DATA:
            raise ValueError(f"data neighborhood needs a data-axis spec, got {self.spec.axis}")
        if not 0 <= self.s_min <= self.s_max:
            raise ValueError(f"invalid sample size bounds [{self.s_min}, {self.s_max}]")

    @classmethod
    def fixed_size(cls, size: int, k_min: int = 0, k_max: int = 0) -> "DataNeighborhood":
        return cls(NeighborhoodSpec.sample_size(k_min, k_max), size, size)

    @classmethod
    def size_range(cls, s_min: int, s_max: int, k_min: int = 0, k_max: int = 0) -> "DataNeighborhood":
        return cls(NeighborhoodSpec.sample_size(k_min, k_max), s_min, s_max)

    def radius(self, k: int) -> float:
        if k == FULL_RANGE:
            return float(self.s_max - self.s_min)
        return self.spec.radius(k)

    def admissible_sizes(self, s: int, k: int) -> range:
        if k == FULL_RANGE:
            return range(self.s_min, self.s_max + 1)
        radius = int(np.floor(self.radius(k)))
        return range(max(self.s_min, s - radius), min(self.s_max, s + radius) + 1)

    def draw_size(self, s: int, k: int, rng: np.random.Generator) -> int:
        sizes = self.admissible_sizes(s, k)
        if len(sizes) == 0:
            raise DegenerateNeighborhoodError(
                f"no sample size within radius {self.radius(k)} of {s} in [{self.s_min}, {self.s_max}]"
            )
        return _pick(sizes, rng)

    def shake(self, landscape: Landscape, k: int, rngs: RngStreams) -> Landscape:
        size = self.draw_size(landscape.sample_size, k, rngs.shaking)
        dataset = landscape.space.catalog.get(landscape.sample.dataset_id)
        if size > dataset.rows:
            raise DegenerateNeighborhoodError(
                f"sample size {size} exceeds dataset {dataset.id!r} with {dataset.rows} rows"
            )
        sample = dataset.draw_sample(size, rngs.sampling)
        return evaluate_landscape(sample, landscape.formulation, landscape.space)


# =============================================================================
# Formulation axis
# =============================================================================


@dataclass(frozen=True)
class FormulationNeighborhood:
    """Formulations near the current one in registry order.

    In "distance" mode N_k(F) holds every formulation whose registry position
    differs from F's by at most radius(k). In "indexed" mode N_k(F) = {F_k}
    with 1-based k, independent of F.
    """

    spec: NeighborhoodSpec
    registry: FormulationRegistry
    mode: Literal["distance", "indexed"] = "distance"

    def __post_init__(self) -> None:
        if self.spec.axis is not NeighborhoodAxis.FORMULATION:
            raise ValueError(
                f"formulation neighborhood needs a formulation-axis spec, got {self.spec.axis}"
            )

    @classmethod
    def by_distance(cls, registry: FormulationRegistry, k_min: int = 0, k_max: int = 1) -> "FormulationNeighborhood":
        return cls(NeighborhoodSpec.formulation_index(k_min, k_max), registry, "distance")

    @classmethod
    def indexed(cls, registry: FormulationRegistry) -> "FormulationNeighborhood":
        return cls(NeighborhoodSpec.formulation_index(1, registry.r), registry, "indexed")

    def candidates(self, formulation: Formulation, k: int) -> list[Formulation]:
        if self.registry.r == 1:
            return [self.registry.at(0)]
        if self.mode == "indexed":
            if not 1 <= k <= self.registry.r:
                raise ValueError(f"indexed power {k} outside [1, {self.registry.r}]")
            return [self.registry.at(k - 1)]
        here = self.registry.position(formulation)
        radius = self.spec.radius(k)
        return [f for pos, f in enumerate(self.registry) if abs(pos - here) <= radius]

    def shake(self, landscape: Landscape, k: int, rngs: RngStreams) -> Landscape:
        candidates = self.candidates(landscape.formulation, k)
        if not candidates:
            raise DegenerateNeighborhoodError(f"no formulation within power {k}")
        formulation = _pick(candidates, rngs.shaking)
        return evaluate_landscape(landscape.sample, formulation, landscape.space)


def shake_landscape(
    landscape: Landscape,
    neighborhoods: tuple[LandscapeNeighborhood, LandscapeNeighborhood],
    k: int,
    phase: Phase,
    rngs: RngStreams,
) -> Landscape:
    """Move along exactly one axis: the data axis in the data phase, else the formulation axis."""
    shaken = neighborhoods[phase.index].shake(landscape, k, rngs)
    logger.debug(
        "Shook %s axis with k=%d: size %d -> %d, formulation %d -> %d",
        phase.value,
        k,
        landscape.sample_size,
        shaken.sample_size,
        landscape.formulation.id,
        shaken.formulation.id,
    )
    return shaken
