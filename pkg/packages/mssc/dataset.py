"""Datasets, sample references and the catalog that resolves them."""

from dataclasses import dataclass, field

import numpy as np

from core.errors import DatasetNotLoadedError, DatasetFormatError


@dataclass(frozen=True, eq=False)
class Dataset:
    """Immutable m x n matrix of finite reals with a catalog handle."""

    id: str
    values: np.ndarray

    def __post_init__(self) -> None:
        values = np.array(self.values, dtype=np.float64, copy=True)
        if values.ndim != 2:
            raise DatasetFormatError(f"dataset must be 2-D, got shape {values.shape}")
        if values.shape[0] < 1 or values.shape[1] < 1:
            raise DatasetFormatError(f"dataset needs m >= 1 and n >= 1, got shape {values.shape}")
        if not np.all(np.isfinite(values)):
            raise DatasetFormatError("dataset contains NaN or infinite values")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @property
    def rows(self) -> int:
        return int(self.values.shape[0])

    @property
    def cols(self) -> int:
        return int(self.values.shape[1])

    def full_sample(self) -> "SampleRef":
        return SampleRef(self.id, np.arange(self.rows))

    def head_sample(self, size: int) -> "SampleRef":
        """The first `size` rows, drawn without randomness."""
        if not 0 <= size <= self.rows:
            raise ValueError(f"sample size {size} outside [0, {self.rows}]")
        return SampleRef(self.id, np.arange(size))

    def draw_sample(self, size: int, rng: np.random.Generator) -> "SampleRef":
        """Uniform sample of `size` distinct rows (without replacement)."""
        if not 0 <= size <= self.rows:
            raise ValueError(f"sample size {size} outside [0, {self.rows}]")
        indices = rng.choice(self.rows, size=size, replace=False)
        return SampleRef(self.id, np.sort(indices))


@dataclass(frozen=True, eq=False)
class SampleRef:
    """Sorted distinct row indices into a dataset."""

    dataset_id: str
    indices: np.ndarray

    def __post_init__(self) -> None:
        indices = np.asarray(self.indices, dtype=np.int64).reshape(-1)
        if indices.size and (indices[0] < 0 or np.any(np.diff(indices) <= 0)):
            indices = np.unique(indices)
            if indices.size and indices[0] < 0:
                raise ValueError("sample indices must be nonnegative")
        indices = indices.copy()
        indices.setflags(write=False)
        object.__setattr__(self, "indices", indices)

    @property
    def size(self) -> int:
        return int(self.indices.size)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SampleRef):
            return NotImplemented
        return self.dataset_id == other.dataset_id and np.array_equal(self.indices, other.indices)

    def __hash__(self) -> int:
        return hash((self.dataset_id, self.indices.tobytes()))


@dataclass
class DatasetCatalog:
    """Loaded datasets by id; resolves samples into point matrices."""

    datasets: dict[str, Dataset] = field(default_factory=dict)

    def add(self, dataset: Dataset) -> Dataset:
        self.datasets[dataset.id] = dataset
        return dataset

    def get(self, dataset_id: str) -> Dataset:
        try:
            return self.datasets[dataset_id]
        except KeyError:
            raise DatasetNotLoadedError(dataset_id) from None

    def resolve(self, sample: SampleRef) -> np.ndarray:
        """Rows of the referenced dataset, in index order."""
        dataset = self.get(sample.dataset_id)
        if sample.size and sample.indices[-1] >= dataset.rows:
            raise ValueError(
                f"sample index {sample.indices[-1]} out of range for dataset "
                f"{dataset.id!r} with {dataset.rows} rows"
            )
        return dataset.values[sample.indices]
