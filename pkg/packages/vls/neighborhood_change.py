"""Neighborhood change steps: sequential and cyclic."""

from dataclasses import dataclass

from vls.landscape import Landscape
from vls.structures import Solution


@dataclass
class ChangeOutcome:
    x: Solution
    landscape: Landscape
    k: int
    improved: bool


def neighborhood_change_sequential(
    x: Solution,
    x_new: Solution,
    landscape: Landscape,
    new_landscape: Landscape,
    k: int,
    k_min: int,
    k_max: int,
    improves: bool | None = None,
) -> ChangeOutcome:
    """Move on strict improvement and reset k; otherwise widen k, wrapping past k_max.

    Both solutions are compared on the shaken landscape unless the caller
    supplies the verdict through `improves`.
    """
    if improves is None:
        improves = new_landscape.objective(x_new) < new_landscape.objective(x)
    if improves:
        return ChangeOutcome(x_new, new_landscape, k_min, True)
    k += 1
    if k > k_max:
        k = k_min
    return ChangeOutcome(x, landscape, k, False)


def neighborhood_change_cyclic(k: int, k_min: int, k_max: int) -> int:
    """Advance k regardless of improvement, wrapping past k_max."""
    k += 1
    return k_min if k > k_max else k
