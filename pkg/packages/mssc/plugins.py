"""MSSC plug-ins for the search engine: local search, transition, solution shake."""

import logging
from dataclasses import dataclass, field

import numpy as np

from core.errors import EmptySampleError
from core.models import Formulation, FormulationKind
from mssc.centroids import CentroidSet
from mssc.dataset import DatasetCatalog
from mssc.kmeans import KMeansResult, cluster_means, kmeans
from mssc.objective import mssc_evaluator, squared_distances
from mssc.seeding import kmeanspp_init, repair_degenerate
from vls.landscape import FormulationRegistry, Landscape, LandscapeSpace

logger = logging.getLogger(__name__)


def describe_mssc_region(formulation: Formulation, n: int) -> str:
    return f"any {formulation.cluster_count}x{n} real matrix"


def mssc_space(catalog: DatasetCatalog, registry: FormulationRegistry) -> LandscapeSpace:
    space = LandscapeSpace(catalog, registry)
    space.register_kind(FormulationKind.MSSC, mssc_evaluator, describe_mssc_region)
    return space


# =============================================================================
# Local Search
# =============================================================================


@dataclass
class KMeansSearcher:
    """Full Lloyd descent from the incoming centroids."""

    tol: float | None = None
    max_iter: int | None = None
    last: KMeansResult | None = field(default=None, repr=False)

    def search(self, x: CentroidSet, landscape: Landscape) -> CentroidSet:
        if landscape.sample_size == 0:
            return x
        self.last = kmeans(landscape.points, x, self.tol, self.max_iter)
        return self.last.centroids


class LloydStep:
    """One assign-then-average move; empty clusters keep their position."""

    def best_neighbor(self, x: CentroidSet, landscape: Landscape) -> CentroidSet:
        points = landscape.points
        live = np.flatnonzero(x.finite_mask)
        if points.shape[0] == 0 or live.size == 0:
            return x
        labels = live[np.argmin(squared_distances(points, x.coords[live]), axis=1)]
        means, counts = cluster_means(points, labels, x.p)
        coords = x.coords.copy()
        owned = counts > 0
        coords[owned] = means[owned]
        return CentroidSet(coords, ~owned)


# =============================================================================
# Transition and Solution Shake
# =============================================================================


@dataclass
class MsscTransition:
    """Carry centroids onto another landscape.

    Any p x n matrix is feasible on any sample, so live centroids pass through
    unchanged. A change of p truncates trailing centroids or appends K-means++
    draws, and degenerate centroids are reseeded on the new sample.
    """

    fallbacks: int = 0

    def transition(
        self,
        x: CentroidSet,
        landscape: Landscape,
        new_landscape: Landscape,
        rng: np.random.Generator,
    ) -> CentroidSet:
        p = new_landscape.formulation.cluster_count
        if x.p > p:
            x = x.truncated(p)
        elif x.p < p:
            if new_landscape.sample_size == 0:
                raise EmptySampleError("cannot pad on empty sample")
            x = x.padded(p - x.p)
        if x.has_degenerate and new_landscape.sample_size > 0:
            seeded = repair_degenerate(x, new_landscape.points, rng)
            self.fallbacks += int(seeded.fallback)
            x = seeded.centroids
        return x


def replace_centroids(
    x: CentroidSet,
    points: np.ndarray,
    k: int,
    choice_rng: np.random.Generator,
    seed_rng: np.random.Generator,
) -> tuple[CentroidSet, bool]:
    """Swap k uniformly chosen centroids for K-means++ draws on the sample.

    k = 0 returns x untouched and draws nothing.
    """
    if k == 0:
        return x, False
    if k > x.p:
        raise ValueError(f"cannot replace {k} of {x.p} centroids")
    chosen = np.sort(choice_rng.choice(x.p, size=k, replace=False))
    seeded = kmeanspp_init(points, 0, x.with_degenerate(chosen), seed_rng)
    return seeded.centroids, seeded.fallback
