"""Synthetic benchmark data: Gaussian mixtures, grid centers, the trap instance."""

import math
from dataclasses import dataclass

import numpy as np

from mssc.dataset import Dataset


@dataclass
class Mixture:
    dataset: Dataset
    centers: np.ndarray
    labels: np.ndarray


def gen_gaussian_mixture(
    centers: np.ndarray | list[list[float]],
    sigma: float,
    points_per_center: int,
    seed: int,
    dataset_id: str = "mixture",
) -> Mixture:
    """Isotropic Gaussian blobs, grouped by center in center order."""
    centers = np.asarray(centers, dtype=np.float64)
    if centers.ndim != 2 or centers.shape[0] < 1:
        raise ValueError("need at least one center given as a 2-D array")
    if not sigma > 0:
        raise ValueError(f"sigma must be positive, got {sigma}")
    if points_per_center < 1:
        raise ValueError(f"points_per_center must be positive, got {points_per_center}")

    rng = np.random.default_rng(seed)
    labels = np.repeat(np.arange(centers.shape[0]), points_per_center)
    noise = rng.normal(0.0, sigma, size=(labels.size, centers.shape[1]))
    return Mixture(Dataset(dataset_id, centers[labels] + noise), centers, labels)


def grid_centers(count: int, spacing: float = 1.0) -> np.ndarray:
    """First `count` nodes of a square 2-D grid, row by row."""
    side = math.ceil(math.sqrt(count))
    return np.array([[(i % side) * spacing, (i // side) * spacing] for i in range(count)])


TRAP_POINTS = [[0.0, 0.0], [0.0, 2.0], [10.0, 0.0], [10.0, 2.0]]


def trap_instance() -> Dataset:
    """Four points where Lloyd from {(0,0),(0,2)} sticks at 100; the optimum is 4."""
    return Dataset("trap4", np.array(TRAP_POINTS))
