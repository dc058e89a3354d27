"""Oracle-backed verification of K-means and Big-means on tiny instances.

Checks per instance:
    kmeans_dominance   K-means from every distinct p-subset of points never
                       beats the exhaustive-partition optimum
    optimum_achievable K-means started at the optimal centroids returns the
                       optimum
    big_means_dominance Big-means on the full instance never beats the optimum
    zero_when_p_equals_s Big-means reaches 0 when every point can be its own cluster
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from bigmeans.big_means import big_means
from bigmeans.structures import Algorithm, BigMeansConfig
from eval.tiny_suite import TinyInstance
from mssc.centroids import CentroidSet
from mssc.kmeans import kmeans
from mssc.oracle import brute_force_mssc

logger = logging.getLogger(__name__)

RELATIVE_TOLERANCE = 1e-9


def _slack(reference: float) -> float:
    return RELATIVE_TOLERANCE * max(1.0, abs(reference))


@dataclass
class InstanceReport:
    name: str
    s: int
    p: int
    oracle: float
    kmeans_best: float
    kmeans_worst: float
    big_means: float
    checks: list[dict[str, Any]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(check["score"] for check in self.checks)

    def violations(self) -> list[dict[str, Any]]:
        return [check for check in self.checks if not check["score"]]


def kmeans_dominance(values: list[float], oracle: float) -> dict[str, Any]:
    worst_gap = min(values) - oracle
    return {
        "key": "kmeans_dominance",
        "score": worst_gap >= -_slack(oracle),
        "detail": f"min K-means objective {min(values)!r} vs optimum {oracle!r}",
    }


def optimum_achievable(value: float, oracle: float) -> dict[str, Any]:
    return {
        "key": "optimum_achievable",
        "score": abs(value - oracle) <= _slack(oracle),
        "detail": f"K-means from optimal centroids gave {value!r}, optimum {oracle!r}",
    }


def big_means_dominance(value: float, oracle: float) -> dict[str, Any]:
    return {
        "key": "big_means_dominance",
        "score": value >= oracle - _slack(oracle),
        "detail": f"Big-means objective {value!r} vs optimum {oracle!r}",
    }


def zero_when_p_equals_s(oracle: float, value: float) -> dict[str, Any]:
    return {
        "key": "zero_when_p_equals_s",
        "score": oracle == 0.0 and value <= _slack(0.0),
        "detail": f"optimum {oracle!r}, Big-means {value!r}",
    }


def verify_instance(
    instance: TinyInstance,
    seed: int = 0,
    iterations: int = 50,
    corrupt_amount: float = 0.0,
) -> InstanceReport:
    """Run every check on one instance.

    `corrupt_amount` is subtracted from each K-means objective, which lets the
    harness prove that it reports violations.
    """
    points = instance.dataset.values
    p = instance.p
    optimal, oracle = brute_force_mssc(points, p)

    values = []
    for subset in itertools.combinations(range(instance.s), p):
        result = kmeans(points, CentroidSet.from_coords(points[list(subset)]), tol=0.0)
        values.append(result.objective - corrupt_amount)
    fixed_point = kmeans(points, optimal, tol=0.0).objective - corrupt_amount

    cfg = BigMeansConfig(
        algorithm=Algorithm.BIGMEANS,
        clusters=p,
        sample_size=instance.s,
        iterations=iterations,
        seed=seed,
    )
    bm = big_means(instance.dataset, cfg).objective

    report = InstanceReport(
        name=instance.name,
        s=instance.s,
        p=p,
        oracle=oracle,
        kmeans_best=float(np.min(values)),
        kmeans_worst=float(np.max(values)),
        big_means=bm,
    )
    report.checks = [
        kmeans_dominance(values, oracle),
        optimum_achievable(fixed_point, oracle),
        big_means_dominance(bm, oracle),
    ]
    if p == instance.s:
        report.checks.append(zero_when_p_equals_s(oracle, bm))
    if not report.passed:
        logger.warning("Instance %s failed: %s", instance.name, report.violations())
    return report


def run_verification(
    instances: list[TinyInstance],
    seed: int = 0,
    iterations: int = 50,
    corrupt: str | None = None,
    corrupt_amount: float = 1.0,
) -> list[InstanceReport]:
    return [
        verify_instance(
            instance,
            seed=seed,
            iterations=iterations,
            corrupt_amount=corrupt_amount if instance.name == corrupt else 0.0,
        )
        for instance in instances
    ]
