"""Exhaustive-partition MSSC oracle for tiny instances."""

import numpy as np

from core.errors import EnumerationBoundError
from mssc.centroids import CentroidSet
from mssc.kmeans import cluster_means
from mssc.objective import as_points

MAX_POINTS = 12
MAX_CLUSTERS = 3


def restricted_growth_strings(s: int, p: int) -> np.ndarray:
    """All partitions of s items into at most p blocks, one row per partition.

    Row r assigns item i to block rows[r, i]; block labels appear in order of
    first use, so each partition occurs exactly once.
    """
    if s == 0:
        return np.zeros((1, 0), dtype=np.int64)
    codes = np.arange(p**s, dtype=np.int64)[:, None]
    labelings = (codes // (p ** np.arange(s, dtype=np.int64))) % p
    prefix_max = np.maximum.accumulate(labelings, axis=1)
    canonical = labelings[:, 0] == 0
    canonical &= np.all(labelings[:, 1:] <= prefix_max[:, :-1] + 1, axis=1)
    return labelings[canonical]


def partition_costs(points: np.ndarray, partitions: np.ndarray, p: int) -> np.ndarray:
    """Within-cluster sum of squares of every partition, vectorized."""
    total = float(np.sum(points**2))
    cost = np.full(partitions.shape[0], total)
    for j in range(p):
        members = (partitions == j).astype(np.float64)
        counts = members.sum(axis=1)
        sums = members @ points
        used = counts > 0
        cost[used] -= np.sum(sums[used] ** 2, axis=1) / counts[used]
    return cost


def brute_force_mssc(data: np.ndarray, p: int) -> tuple[CentroidSet, float]:
    """Global MSSC optimum by enumerating every partition into at most p clusters.

    When fewer than p clusters are used, unused centroid slots repeat the
    first centroid, which leaves the objective unchanged.
    """
    points = as_points(data)
    s = points.shape[0]
    if s > MAX_POINTS or p > MAX_CLUSTERS:
        raise EnumerationBoundError(
            f"oracle bound is s <= {MAX_POINTS}, p <= {MAX_CLUSTERS}; got s={s}, p={p}"
        )
    if s == 0:
        raise EnumerationBoundError("oracle needs at least one point")
    if p < 1:
        raise ValueError(f"cluster count must be positive, got {p}")

    partitions = restricted_growth_strings(s, p)
    costs = partition_costs(points, partitions, p)
    best = partitions[int(np.argmin(costs))]

    means, counts = cluster_means(points, best, p)
    used = counts > 0
    means[~used] = means[0]
    value = float(np.sum((points - means[best]) ** 2))
    return CentroidSet.from_coords(means), value
