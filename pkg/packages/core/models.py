"""Pydantic models for landscape-search configuration and run records."""

import math
from enum import Enum
try:
    from typing import Self
except ImportError:  # Python < 3.11
    from typing_extensions import Self

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    NonNegativeInt,
    PositiveFloat,
    PositiveInt,
    model_validator,
)


# =============================================================================
# Enums
# =============================================================================


class FormulationKind(str, Enum):
    """Problem formulations the engine knows how to evaluate."""

    MSSC = "mssc"


class NeighborhoodAxis(str, Enum):
    """Element space a neighborhood structure acts on."""

    DATA = "data"
    FORMULATION = "formulation"
    SOLUTION = "solution"


class Phase(str, Enum):
    """Shaking phase of the two-phase search loop."""

    DATA = "data"
    FORMULATION = "formulation"

    @property
    def index(self) -> int:
        return 0 if self is Phase.DATA else 1

    @classmethod
    def from_index(cls, i: int) -> "Phase":
        return cls.DATA if i == 0 else cls.FORMULATION


class ChangeScheme(str, Enum):
    """How the shake power moves after an iteration."""

    SEQUENTIAL = "sequential"
    CYCLIC = "cyclic"


# =============================================================================
# Formulations and Neighborhoods
# =============================================================================


class Formulation(BaseModel):
    """An objective plus constraint descriptor F = (f, C).

    For the MSSC kind the only parameter is the cluster count p.
    """

    model_config = ConfigDict(frozen=True)

    id: int = Field(ge=0, description="Index into the formulation registry")
    kind: FormulationKind = FormulationKind.MSSC
    cluster_count: int = Field(ge=1, description="Number of clusters p")


class NeighborhoodSpec(BaseModel):
    """Radii of a family of nested neighborhoods N_kmin .. N_kmax."""

    model_config = ConfigDict(frozen=True)

    axis: NeighborhoodAxis
    k_min: int = Field(ge=0)
    k_max: int = Field(ge=0)
    radii: tuple[float, ...]
    distance_id: str = Field(description="Name of the distance function phi")

    @model_validator(mode="after")
    def _check_radii(self) -> Self:
        if self.k_min > self.k_max:
            raise ValueError(f"k_min={self.k_min} exceeds k_max={self.k_max}")
        expected = self.k_max - self.k_min + 1
        if len(self.radii) != expected:
            raise ValueError(f"expected {expected} radii for k in [{self.k_min}, {self.k_max}]")
        if any(r < 0 or not math.isfinite(r) for r in self.radii):
            raise ValueError("radii must be finite and nonnegative")
        if any(b <= a for a, b in zip(self.radii, self.radii[1:])):
            raise ValueError("radii must be strictly increasing")
        return self

    @classmethod
    def sample_size(cls, k_min: int, k_max: int) -> "NeighborhoodSpec":
        """Data-axis spec with phi = |s - s'| and radius k for power k."""
        return cls(
            axis=NeighborhoodAxis.DATA,
            k_min=k_min,
            k_max=k_max,
            radii=tuple(float(k) for k in range(k_min, k_max + 1)),
            distance_id="abs_sample_size_difference",
        )

    @classmethod
    def formulation_index(cls, k_min: int, k_max: int) -> "NeighborhoodSpec":
        """Formulation-axis spec with phi = |position - position'| in the registry."""
        return cls(
            axis=NeighborhoodAxis.FORMULATION,
            k_min=k_min,
            k_max=k_max,
            radii=tuple(float(k) for k in range(k_min, k_max + 1)),
            distance_id="abs_registry_position_difference",
        )

    def radius(self, k: int) -> float:
        if not self.k_min <= k <= self.k_max:
            raise ValueError(f"shake power {k} outside [{self.k_min}, {self.k_max}]")
        return self.radii[k - self.k_min]


# =============================================================================
# Engine Configuration
# =============================================================================


class ShakeBounds(BaseModel):
    """Admissible shake powers [k_min, k_max] of one phase."""

    model_config = ConfigDict(frozen=True)

    k_min: int = Field(ge=0)
    k_max: int = Field(ge=0)

    @model_validator(mode="after")
    def _check_order(self) -> Self:
        if self.k_min > self.k_max:
            raise ValueError(f"k_min={self.k_min} exceeds k_max={self.k_max}")
        return self


class Budget(BaseModel):
    """Stopping rule: iteration cap T, wall-clock cap, or both (first hit wins)."""

    model_config = ConfigDict(frozen=True)

    max_iterations: PositiveInt | None = None
    max_seconds: PositiveFloat | None = None

    @model_validator(mode="after")
    def _check_any(self) -> Self:
        if self.max_iterations is None and self.max_seconds is None:
            raise ValueError("budget needs max_iterations, max_seconds or both")
        return self


class VlsConfig(BaseModel):
    """Parameters of the two-phase search loop.

    shake_bounds holds the K matrix rows for the data and formulation phases,
    quotas holds (S1, S2).
    """

    model_config = ConfigDict(frozen=True)

    shake_bounds: tuple[ShakeBounds, ShakeBounds]
    quotas: tuple[NonNegativeInt, NonNegativeInt]
    budget: Budget
    seed: int = Field(default=0, ge=0, lt=2**64)
    workers: int = Field(default=1, ge=1)
    change_schemes: tuple[ChangeScheme, ChangeScheme] = (
        ChangeScheme.SEQUENTIAL,
        ChangeScheme.SEQUENTIAL,
    )
    phase_stall_limit: PositiveInt | None = Field(
        default=None,
        description="If set, a phase runs until this many consecutive non-improving iterations",
    )

    @model_validator(mode="after")
    def _check_quotas(self) -> Self:
        if sum(self.quotas) < 1:
            raise ValueError("at least one phase quota must be positive")
        return self


# =============================================================================
# Run Records
# =============================================================================


class HistoryRow(BaseModel):
    """One shake -> search -> change iteration."""

    model_config = ConfigDict(ser_json_inf_nan="constants")

    t: int = Field(ge=0)
    phase: Phase
    k: int
    sample_size: int = Field(ge=0)
    objective: float
    improved: bool
    elapsed_ms: float = 0.0
    formulation_id: int = 0

    def trace_key(self) -> tuple[int, str, int, int, float, bool, int]:
        """Row content without timing, for reproducibility comparisons."""
        return (
            self.t,
            self.phase.value,
            self.k,
            self.sample_size,
            self.objective,
            self.improved,
            self.formulation_id,
        )


class RunRecord(BaseModel):
    """Per-iteration trace of one search run."""

    model_config = ConfigDict(ser_json_inf_nan="constants")

    rows: list[HistoryRow] = Field(default_factory=list)
    unsuccessful_iterations: int = 0
    seeding_fallbacks: int = 0
    notes: list[str] = Field(default_factory=list)

    def acceptance_trace(self) -> list[tuple[int, str, int, int, float, bool, int]]:
        return [row.trace_key() for row in self.rows]

    def accepted_objectives(self) -> list[float]:
        return [row.objective for row in self.rows if row.improved]
