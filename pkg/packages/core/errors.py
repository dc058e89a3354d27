"""Exception hierarchy shared by every package.

Recoverable conditions (seeding fallbacks, empty improvement history) are
logged and counted in run records instead of raised.
"""


class VlsError(Exception):
    """Base class for all landscape-search errors."""


class UnknownFormulationError(VlsError, KeyError):
    """A formulation id is not present in the registry."""

    def __init__(self, formulation_id: int):
        self.formulation_id = formulation_id
        super().__init__(f"Formulation {formulation_id} is not registered")

    def __str__(self) -> str:
        return self.args[0]


class DatasetNotLoadedError(VlsError, KeyError):
    """A sample references a dataset that is not in the catalog."""

    def __init__(self, dataset_id: str):
        self.dataset_id = dataset_id
        super().__init__(f"Dataset {dataset_id!r} is not loaded")

    def __str__(self) -> str:
        return self.args[0]


class DegenerateNeighborhoodError(VlsError):
    """Shaking found no admissible candidate in the neighborhood."""


class DegenerateCentroidError(VlsError, ValueError):
    """An operation that needs initialized centroids received degenerate ones."""


class EmptySampleError(VlsError, ValueError):
    """An operation that needs data points received an empty sample."""


class EnumerationBoundError(VlsError, ValueError):
    """The brute-force oracle was asked for an instance above its bound."""


class DatasetFormatError(VlsError, ValueError):
    """A dataset file could not be parsed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SchemaVersionError(VlsError, ValueError):
    """A result document has a missing or unsupported schema version."""


class BudgetError(VlsError, ValueError):
    """The engine was given a budget that cannot run a single iteration."""
