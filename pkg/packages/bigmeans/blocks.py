"""Big-means expressed as a parameter block of the generic search engine."""

from dataclasses import dataclass

from bigmeans.structures import Algorithm, BigMeansConfig
from core.models import Budget, ShakeBounds, VlsConfig
from mssc.centroids import CentroidSet
from mssc.dataset import Dataset, DatasetCatalog
from mssc.plugins import KMeansSearcher, MsscTransition, mssc_space
from vls.acceptance import KeepTheBest, ReevaluatedIncumbent
from vls.engine import run_bvls
from vls.landscape import FormulationRegistry, Landscape, evaluate_landscape
from vls.neighborhoods import DataNeighborhood, FormulationNeighborhood, LandscapeNeighborhood
from vls.structures import BvlsOutcome, IterationObserver, Plugins


@dataclass
class BvlsBlock:
    x0: CentroidSet
    landscape0: Landscape
    config: VlsConfig
    plugins: Plugins
    neighborhoods: tuple[LandscapeNeighborhood, LandscapeNeighborhood]

    def run(self, worker: int = 0, observer: IterationObserver | None = None) -> BvlsOutcome:
        return run_bvls(
            self.x0,
            self.landscape0,
            self.config,
            self.plugins,
            self.neighborhoods,
            worker=worker,
            observer=observer,
        )


def big_means_block(dataset: Dataset, cfg: BigMeansConfig) -> BvlsBlock:
    """s_min = s_max = s, K1 = (0, 0), S = (1, 0), keep-the-best, MSSC plug-ins.

    The start is all-degenerate centroids on the first s rows, so the first
    recorded best is +inf and no randomness is spent before the loop.
    """
    if cfg.algorithm is not Algorithm.BIGMEANS or cfg.sample_size is None:
        raise ValueError("big_means_block needs a bigmeans config with a sample size")
    s = cfg.sample_size
    catalog = DatasetCatalog()
    catalog.add(dataset)
    registry = FormulationRegistry.mssc([cfg.clusters])
    space = mssc_space(catalog, registry)
    landscape0 = evaluate_landscape(dataset.head_sample(s), registry.at(0), space)

    config = VlsConfig(
        shake_bounds=(ShakeBounds(k_min=0, k_max=0), ShakeBounds(k_min=0, k_max=0)),
        quotas=(1, 0),
        budget=Budget(max_iterations=cfg.iterations, max_seconds=cfg.max_seconds),
        seed=cfg.seed,
        workers=cfg.workers,
    )
    plugins = Plugins(
        local_searcher=KMeansSearcher(cfg.kmeans_tol, cfg.kmeans_max_iter),
        transition=MsscTransition(),
        acceptance=ReevaluatedIncumbent() if cfg.reevaluate_incumbent else KeepTheBest(),
    )
    neighborhoods = (
        DataNeighborhood.fixed_size(s),
        FormulationNeighborhood.by_distance(registry, 0, 0),
    )
    return BvlsBlock(
        CentroidSet.all_degenerate(cfg.clusters, dataset.cols), landscape0, config, plugins, neighborhoods
    )
