"""Data package for dataset files, synthetic data and result documents."""

from .loaders import load_dataset, save_dataset
from .results import (
    SCHEMA_VERSION,
    ResultDocument,
    read_history_csv,
    read_labels,
    read_result,
    write_history_csv,
    write_result,
)
from .synthetic import Mixture, gen_gaussian_mixture, grid_centers, trap_instance

__all__ = [
    "load_dataset",
    "save_dataset",
    "gen_gaussian_mixture",
    "grid_centers",
    "trap_instance",
    "Mixture",
    "ResultDocument",
    "SCHEMA_VERSION",
    "write_result",
    "read_result",
    "read_labels",
    "write_history_csv",
    "read_history_csv",
]
