"""Minimum sum-of-squares clustering kernel.

The engine plug-ins live in ``mssc.plugins`` and are imported from there.
"""

from .centroids import CentroidSet, LabelAssignment
from .dataset import Dataset, DatasetCatalog, SampleRef
from .kmeans import KMeansResult, kmeans
from .objective import assign_labels, landscape_objective, mssc_objective, squared_distances
from .oracle import brute_force_mssc
from .seeding import SeedingResult, kmeanspp_init, repair_degenerate

__all__ = [
    "Dataset",
    "DatasetCatalog",
    "SampleRef",
    "CentroidSet",
    "LabelAssignment",
    "mssc_objective",
    "landscape_objective",
    "assign_labels",
    "squared_distances",
    "kmeans",
    "KMeansResult",
    "kmeanspp_init",
    "repair_degenerate",
    "SeedingResult",
    "brute_force_mssc",
]
