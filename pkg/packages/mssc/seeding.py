"""K-means++ (D-squared) seeding.

One routine covers fresh seeding, refilling degenerate slots of an existing
centroid set, and appending extra centroids.
"""

import logging
from dataclasses import dataclass

import numpy as np

from core.errors import EmptySampleError
from mssc.centroids import CentroidSet
from mssc.objective import as_points, squared_distances

logger = logging.getLogger(__name__)


@dataclass
class SeedingResult:
    centroids: CentroidSet
    fallback: bool = False
    """True when D-squared mass ran out and slots were filled uniformly with replacement."""


def kmeanspp_init(
    data: np.ndarray,
    need: int,
    existing: CentroidSet | None,
    rng: np.random.Generator,
) -> SeedingResult:
    """Fill every degenerate slot of `existing`, then append `need` centroids.

    Each new centroid is a copy of a point drawn with probability
    proportional to its squared distance to the nearest live centroid. The
    first draw is uniform when no live centroid exists. If every point
    coincides with a live centroid, remaining slots are drawn uniformly with
    replacement and the result is marked as a fallback.
    """
    points = as_points(data)
    s, n = points.shape
    if existing is None:
        existing = CentroidSet.all_degenerate(0, n)
    if need < 0:
        raise ValueError(f"need must be nonnegative, got {need}")
    if need:
        existing = existing.padded(need)
    slots = existing.degenerate_indices()
    if slots.size == 0:
        return SeedingResult(existing)
    if s == 0:
        raise EmptySampleError("K-means++ needs at least one point")

    coords = existing.coords.copy()
    live = coords[~existing.degenerate]
    if live.shape[0]:
        min_d2 = squared_distances(points, live).min(axis=1)
    else:
        min_d2 = None
    fallback = False

    for slot in slots:
        if min_d2 is None:
            index = int(rng.integers(s))
        else:
            cumulative = np.cumsum(min_d2)
            total = cumulative[-1]
            if total > 0.0:
                r = rng.random() * total
                index = min(int(np.searchsorted(cumulative, r, side="right")), s - 1)
            else:
                fallback = True
                index = int(rng.integers(s))
        coords[slot] = points[index]
        d2 = squared_distances(points, points[index : index + 1])[:, 0]
        min_d2 = d2 if min_d2 is None else np.minimum(min_d2, d2)

    if fallback:
        logger.warning(
            "K-means++ ran out of distinct points (%d points, %d slots); drew uniformly with replacement",
            s,
            slots.size,
        )
    return SeedingResult(CentroidSet(coords, np.zeros(existing.p, dtype=bool)), fallback)


def repair_degenerate(
    centroids: CentroidSet, data: np.ndarray, rng: np.random.Generator
) -> SeedingResult:
    """Reseed degenerate centroids on the sample; live centroids pass through untouched.

    Draws nothing from `rng` when there is nothing to repair.
    """
    if not centroids.has_degenerate:
        return SeedingResult(centroids)
    return kmeanspp_init(data, 0, centroids, rng)
