"""Acceptance rules for candidate solutions.

- ShakenLandscapeImprovement compares both solutions on the shaken landscape
- KeepTheBest compares against the recorded best value
- ReevaluatedIncumbent compares against the incumbent on the shaken landscape
  once a finite best has been recorded
- LexicographicImprovement walks the formulation registry in order
"""

import math
from collections.abc import Sequence
from dataclasses import dataclass

from vls.landscape import FormulationRegistry, Landscape, evaluate_landscape
from vls.structures import Solution


def accept_values(current: Sequence[float], candidate: Sequence[float]) -> bool:
    """True iff candidate is strictly smaller at the first position where they differ."""
    for old, new in zip(current, candidate, strict=True):
        if new < old:
            return True
        if new > old:
            return False
    return False


def registry_objectives(
    solution: Solution, landscape: Landscape, registry: FormulationRegistry
) -> list[float]:
    """f_1..f_r of a solution, each evaluated on the landscape's sample."""
    return [
        evaluate_landscape(landscape.sample, formulation, landscape.space).objective(solution)
        for formulation in registry
    ]


def accept(
    x: Solution, x_new: Solution, landscape: Landscape, registry: FormulationRegistry
) -> bool:
    return accept_values(
        registry_objectives(x, landscape, registry),
        registry_objectives(x_new, landscape, registry),
    )


class ShakenLandscapeImprovement:
    def decide(
        self, x: Solution, x_new: Solution, new_landscape: Landscape, incumbent_value: float
    ) -> tuple[bool, float]:
        value = new_landscape.objective(x_new)
        if value < new_landscape.objective(x):
            return True, value
        return False, incumbent_value


class KeepTheBest:
    def decide(
        self, x: Solution, x_new: Solution, new_landscape: Landscape, incumbent_value: float
    ) -> tuple[bool, float]:
        value = new_landscape.objective(x_new)
        if value < incumbent_value:
            return True, value
        return False, incumbent_value


class ReevaluatedIncumbent:
    def decide(
        self, x: Solution, x_new: Solution, new_landscape: Landscape, incumbent_value: float
    ) -> tuple[bool, float]:
        value = new_landscape.objective(x_new)
        reference = new_landscape.objective(x) if math.isfinite(incumbent_value) else incumbent_value
        if value < reference:
            return True, value
        return False, incumbent_value


@dataclass
class LexicographicImprovement:
    registry: FormulationRegistry

    def decide(
        self, x: Solution, x_new: Solution, new_landscape: Landscape, incumbent_value: float
    ) -> tuple[bool, float]:
        if accept(x, x_new, new_landscape, self.registry):
            return True, new_landscape.objective(x_new)
        return False, incumbent_value
