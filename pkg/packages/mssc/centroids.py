"""Centroid sets (MSSC solutions) and label assignments."""

from dataclasses import dataclass

import numpy as np


def _frozen(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class CentroidSet:
    """p centroids in n dimensions with per-centroid degeneracy flags.

    A degenerate centroid owns no points or was never initialized. Its
    coordinates may be NaN (never initialized) or a stale finite position
    left behind by K-means when its cluster emptied.
    """

    coords: np.ndarray
    degenerate: np.ndarray

    def __post_init__(self) -> None:
        coords = np.array(self.coords, dtype=np.float64, copy=True)
        if coords.ndim != 2:
            raise ValueError(f"centroid coordinates must be p x n, got shape {coords.shape}")
        flags = np.array(self.degenerate, dtype=bool, copy=True).reshape(-1)
        if flags.shape[0] != coords.shape[0]:
            raise ValueError(f"{flags.shape[0]} degeneracy flags for {coords.shape[0]} centroids")
        if not np.all(np.isfinite(coords[~flags])):
            raise ValueError("non-degenerate centroids must have finite coordinates")
        object.__setattr__(self, "coords", _frozen(coords))
        object.__setattr__(self, "degenerate", _frozen(flags))

    # -------------------------------------------------------------------------
    # Constructors
    # -------------------------------------------------------------------------

    @classmethod
    def from_coords(cls, coords: np.ndarray) -> "CentroidSet":
        coords = np.asarray(coords, dtype=np.float64)
        return cls(coords, np.zeros(coords.shape[0], dtype=bool))

    @classmethod
    def all_degenerate(cls, p: int, n: int) -> "CentroidSet":
        """Uninitialized solution: NaN coordinates, every flag set."""
        return cls(np.full((p, n), np.nan), np.ones(p, dtype=bool))

    # -------------------------------------------------------------------------
    # Views
    # -------------------------------------------------------------------------

    @property
    def p(self) -> int:
        return int(self.coords.shape[0])

    @property
    def n(self) -> int:
        return int(self.coords.shape[1])

    @property
    def has_degenerate(self) -> bool:
        return bool(self.degenerate.any())

    @property
    def finite_mask(self) -> np.ndarray:
        return np.all(np.isfinite(self.coords), axis=1)

    def degenerate_indices(self) -> np.ndarray:
        return np.flatnonzero(self.degenerate)

    # -------------------------------------------------------------------------
    # Derived sets
    # -------------------------------------------------------------------------

    def with_rows(self, indices: np.ndarray, rows: np.ndarray) -> "CentroidSet":
        """Copy with the given rows replaced and their flags cleared."""
        coords = self.coords.copy()
        flags = self.degenerate.copy()
        coords[indices] = rows
        flags[indices] = False
        return CentroidSet(coords, flags)

    def with_degenerate(self, indices: np.ndarray) -> "CentroidSet":
        flags = self.degenerate.copy()
        flags[indices] = True
        return CentroidSet(self.coords, flags)

    def with_flags_cleared(self) -> "CentroidSet":
        """Copy where every centroid with finite coordinates counts as live."""
        return CentroidSet(self.coords, ~self.finite_mask)

    def truncated(self, p: int) -> "CentroidSet":
        return CentroidSet(self.coords[:p], self.degenerate[:p])

    def padded(self, extra: int) -> "CentroidSet":
        """Append `extra` degenerate slots at the end."""
        coords = np.vstack([self.coords, np.full((extra, self.n), np.nan)])
        flags = np.concatenate([self.degenerate, np.ones(extra, dtype=bool)])
        return CentroidSet(coords, flags)

    def same_as(self, other: "CentroidSet") -> bool:
        """Bitwise equality of coordinates (NaN equals NaN) and flags."""
        return (
            self.coords.shape == other.coords.shape
            and self.coords.tobytes() == other.coords.tobytes()
            and np.array_equal(self.degenerate, other.degenerate)
        )


@dataclass(frozen=True, eq=False)
class LabelAssignment:
    """Cluster index in [0, p) for each point."""

    labels: np.ndarray
    p: int

    def __post_init__(self) -> None:
        labels = np.array(self.labels, dtype=np.int64, copy=True).reshape(-1)
        if labels.size and (labels.min() < 0 or labels.max() >= self.p):
            raise ValueError(f"labels must lie in [0, {self.p})")
        object.__setattr__(self, "labels", _frozen(labels))

    def __len__(self) -> int:
        return int(self.labels.size)

    def counts(self) -> np.ndarray:
        return np.bincount(self.labels, minlength=self.p)
