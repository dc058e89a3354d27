"""Deterministic tiny MSSC instances for oracle verification.

Every instance has at most 8 points in at most 2 dimensions and at most 3
clusters. Most are well-separated blobs; every tenth instance has p = s.
"""

from dataclasses import dataclass

import numpy as np

from mssc.dataset import Dataset

MAX_TINY_POINTS = 8
BLOB_SPACING = 10.0
BLOB_SIGMA = 0.5


@dataclass(frozen=True)
class TinyInstance:
    name: str
    dataset: Dataset
    p: int

    @property
    def s(self) -> int:
        return self.dataset.rows


def make_tiny_instance(index: int, seed: int = 0) -> TinyInstance:
    rng = np.random.default_rng([seed, index])
    n = 1 + index % 2
    name = f"tiny-{index:02d}"

    if index % 10 == 9:
        p = 2 + (index // 10) % 2
        points = rng.uniform(0.0, BLOB_SPACING, size=(p, n))
        return TinyInstance(name, Dataset(name, points), p)

    p = 1 + index % 3
    s = int(rng.integers(max(p, 3), MAX_TINY_POINTS + 1))
    nodes = np.array([[i * BLOB_SPACING, (i % 2) * BLOB_SPACING] for i in range(3)])[:, :n]
    centers = nodes[rng.permutation(3)[:p]]
    membership = np.concatenate([np.arange(p), rng.integers(p, size=s - p)])
    points = centers[membership] + rng.normal(0.0, BLOB_SIGMA, size=(s, n))
    return TinyInstance(name, Dataset(name, points), p)


def tiny_suite(count: int = 20, seed: int = 0) -> list[TinyInstance]:
    return [make_tiny_instance(i, seed) for i in range(count)]
