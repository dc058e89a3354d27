"""Big-means family of sample-based MSSC searches."""

from .big_means import big_means
from .big_optima import big_optima_s3, choose_s_opt
from .big_vns import big_vns_clust
from .blocks import BvlsBlock, big_means_block
from .board import BestBoard, BoardEntry
from .structures import (
    Algorithm,
    BigMeansConfig,
    ClusteringResult,
    ImprovementEvent,
    ImprovementHistory,
    WorkerOutcome,
)
from .workers import worker_pool

RUNNERS = {
    Algorithm.BIGMEANS: big_means,
    Algorithm.BIGOPTIMA: big_optima_s3,
    Algorithm.BIGVNS: big_vns_clust,
}

__all__ = [
    "big_means",
    "big_optima_s3",
    "big_vns_clust",
    "choose_s_opt",
    "big_means_block",
    "BvlsBlock",
    "BestBoard",
    "BoardEntry",
    "worker_pool",
    "Algorithm",
    "BigMeansConfig",
    "ClusteringResult",
    "ImprovementEvent",
    "ImprovementHistory",
    "WorkerOutcome",
    "RUNNERS",
]
