"""Lloyd's K-means with freeze-and-flag handling of empty clusters."""

import logging
from dataclasses import dataclass, field

import numpy as np

from core.errors import DegenerateCentroidError, EmptySampleError
from core.settings import get_settings
from mssc.centroids import CentroidSet
from mssc.objective import as_points, squared_distances

logger = logging.getLogger(__name__)


@dataclass
class KMeansResult:
    centroids: CentroidSet
    labels: np.ndarray
    objective: float
    iterations: int
    trace: list[float] = field(default_factory=list)


def cluster_means(
    points: np.ndarray, labels: np.ndarray, p: int
) -> tuple[np.ndarray, np.ndarray]:
    """Per-cluster means and member counts; rows of empty clusters are NaN."""
    counts = np.bincount(labels, minlength=p)
    sums = np.zeros((p, points.shape[1]))
    np.add.at(sums, labels, points)
    means = np.full((p, points.shape[1]), np.nan)
    nonempty = counts > 0
    means[nonempty] = sums[nonempty] / counts[nonempty, None]
    return means, counts


def kmeans(
    data: np.ndarray,
    init: CentroidSet,
    tol: float | None = None,
    max_iter: int | None = None,
) -> KMeansResult:
    """Run Lloyd iterations from `init` on the given points.

    Stops when the relative objective decrease drops below `tol`, when no
    label changes, when the objective reaches 0, or after `max_iter`
    assignment passes. A cluster that empties keeps its last position, stops
    taking part in assignment and is flagged degenerate in the result.
    """
    points = as_points(data)
    if points.shape[0] == 0:
        raise EmptySampleError("K-means needs at least one point")
    if init.has_degenerate:
        raise DegenerateCentroidError(
            f"K-means started from degenerate centroids {init.degenerate_indices().tolist()}"
        )
    settings = get_settings()
    tol = settings.kmeans_tol if tol is None else tol
    max_iter = settings.kmeans_max_iter if max_iter is None else max_iter

    p = init.p
    coords = init.coords.copy()
    live = np.ones(p, dtype=bool)
    rows = np.arange(points.shape[0])
    labels: np.ndarray | None = None
    previous = np.inf
    trace: list[float] = []
    iterations = 0

    while True:
        live_idx = np.flatnonzero(live)
        distances = squared_distances(points, coords[live_idx])
        nearest = np.argmin(distances, axis=1)
        objective = float(distances[rows, nearest].sum())
        new_labels = live_idx[nearest]
        trace.append(objective)
        iterations += 1

        unchanged = labels is not None and np.array_equal(new_labels, labels)
        labels = new_labels
        stalled = np.isfinite(previous) and previous - objective < tol * previous
        if objective <= 0.0 or unchanged or stalled or iterations >= max_iter:
            break
        previous = objective

        means, counts = cluster_means(points, labels, p)
        emptied = live & (counts == 0)
        if emptied.any():
            logger.debug("Clusters %s emptied at iteration %d", np.flatnonzero(emptied).tolist(), iterations)
        live &= counts > 0
        coords[live] = means[live]

    owned = np.bincount(labels, minlength=p) > 0
    return KMeansResult(
        centroids=CentroidSet(coords, ~(live & owned)),
        labels=labels,
        objective=trace[-1],
        iterations=iterations,
        trace=trace,
    )
