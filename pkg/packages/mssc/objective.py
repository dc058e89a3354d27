"""Sum-of-squares objective and nearest-centroid assignment.

All distances are squared Euclidean. Ties go to the lowest centroid index.
"""

import numpy as np
from scipy.spatial.distance import cdist

from core.errors import DegenerateCentroidError
from core.models import Formulation
from mssc.centroids import CentroidSet, LabelAssignment
from mssc.dataset import Dataset


def as_points(data: np.ndarray | Dataset) -> np.ndarray:
    if isinstance(data, Dataset):
        return data.values
    points = np.asarray(data, dtype=np.float64)
    if points.ndim != 2:
        raise ValueError(f"points must be a 2-D array, got shape {points.shape}")
    return points


def squared_distances(points: np.ndarray, centroids: np.ndarray) -> np.ndarray:
    """s x p matrix of squared Euclidean distances."""
    return cdist(points, centroids, "sqeuclidean")


def _require_live(centroids: CentroidSet) -> None:
    if centroids.has_degenerate:
        raise DegenerateCentroidError(
            f"objective undefined on degenerate centroids {centroids.degenerate_indices().tolist()}"
        )


def _nearest(points: np.ndarray, coords: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    distances = squared_distances(points, coords)
    labels = np.argmin(distances, axis=1)
    return labels, distances[np.arange(points.shape[0]), labels]


def assign_labels(centroids: CentroidSet, data: np.ndarray | Dataset) -> LabelAssignment:
    _require_live(centroids)
    points = as_points(data)
    if points.shape[0] == 0:
        return LabelAssignment(np.zeros(0, dtype=np.int64), centroids.p)
    labels, _ = _nearest(points, centroids.coords)
    return LabelAssignment(labels, centroids.p)


def mssc_objective(centroids: CentroidSet, data: np.ndarray | Dataset) -> float:
    """Sum over points of the squared distance to the nearest centroid."""
    _require_live(centroids)
    points = as_points(data)
    if points.shape[0] == 0:
        return 0.0
    _, nearest = _nearest(points, centroids.coords)
    return float(nearest.sum())


def landscape_objective(centroids: CentroidSet, points: np.ndarray) -> float:
    """Objective over every centroid with finite coordinates, flags ignored.

    Returns +inf when no centroid has finite coordinates and 0 on an empty
    sample.
    """
    if points.shape[0] == 0:
        return 0.0
    live = centroids.coords[centroids.finite_mask]
    if live.shape[0] == 0:
        return float("inf")
    _, nearest = _nearest(points, live)
    return float(nearest.sum())


def mssc_evaluator(points: np.ndarray, formulation: Formulation, solution: CentroidSet) -> float:
    """Objective of the first p centroids, p taken from the formulation.

    A solution with fewer than p centroids is valued on the ones it has, as if
    the missing slots were degenerate.
    """
    p = formulation.cluster_count
    if solution.p > p:
        solution = solution.truncated(p)
    return landscape_objective(solution, points)
