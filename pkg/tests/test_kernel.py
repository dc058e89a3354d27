#!/usr/bin/env python3
"""Tests for the MSSC kernel: objective, labels, K-means, K-means++ and the oracle.

Run from the project root:

    poetry run pytest tests/test_kernel.py
"""

import itertools
import sys
from pathlib import Path

# Add packages to path for development
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root / "packages"))

import numpy as np
import pytest

from core.errors import DegenerateCentroidError, EmptySampleError, EnumerationBoundError
from mssc.centroids import CentroidSet
from mssc.dataset import Dataset
from mssc.kmeans import kmeans
from mssc.objective import assign_labels, landscape_objective, mssc_objective, squared_distances
from mssc.oracle import brute_force_mssc, restricted_growth_strings
from mssc.seeding import kmeanspp_init, repair_degenerate

TRAP = np.array([[0.0, 0.0], [0.0, 2.0], [10.0, 0.0], [10.0, 2.0]])


def _centroids(rows) -> CentroidSet:
    return CentroidSet.from_coords(np.array(rows, dtype=float))


# =============================================================================
# Objective and labels
# =============================================================================


def test_objective_examples():
    assert mssc_objective(_centroids([[0, 0]]), np.array([[0.0, 0.0]])) == 0.0
    assert mssc_objective(_centroids([[1, 0]]), np.array([[0.0, 0.0], [2.0, 0.0]])) == 2.0
    assert mssc_objective(_centroids([[0, 1], [10, 1]]), TRAP) == 4.0


def test_objective_accepts_dataset_and_empty_input():
    dataset = Dataset("trap", TRAP)
    assert mssc_objective(_centroids([[0, 1], [10, 1]]), dataset) == 4.0
    assert mssc_objective(_centroids([[0, 1]]), np.zeros((0, 2))) == 0.0


def test_objective_rejects_degenerate_centroids():
    centroids = _centroids([[0, 0], [1, 1]]).with_degenerate(np.array([1]))
    with pytest.raises(DegenerateCentroidError, match="degenerate"):
        mssc_objective(centroids, TRAP)
    with pytest.raises(DegenerateCentroidError):
        assign_labels(centroids, TRAP)


def test_labels_break_ties_to_lowest_index():
    labels = assign_labels(_centroids([[-1, 0], [1, 0]]), np.array([[0.0, 0.0]]))
    assert labels.labels.tolist() == [0]


def test_labels_nearest():
    labels = assign_labels(_centroids([[1, 0], [9, 0]]), np.array([[0.0, 0.0], [10.0, 0.0]]))
    assert labels.labels.tolist() == [0, 1]


def test_labels_consistent_with_objective():
    rng = np.random.default_rng(7)
    for _ in range(100):
        points = rng.normal(size=(int(rng.integers(1, 30)), 3))
        centroids = CentroidSet.from_coords(rng.normal(size=(int(rng.integers(1, 5)), 3)))
        labels = assign_labels(centroids, points).labels
        assigned = np.sum((points - centroids.coords[labels]) ** 2, axis=1)
        direct = squared_distances(points, centroids.coords)[np.arange(len(points)), labels]
        assert float(direct.sum()) == mssc_objective(centroids, points)
        assert np.isclose(assigned.sum(), mssc_objective(centroids, points), rtol=1e-12)


def test_landscape_objective_ignores_flags_but_not_nan():
    centroids = CentroidSet.all_degenerate(2, 2)
    assert landscape_objective(centroids, TRAP) == float("inf")
    assert landscape_objective(centroids, np.zeros((0, 2))) == 0.0
    stale = CentroidSet(np.array([[0.0, 1.0], [np.nan, np.nan]]), np.array([True, True]))
    assert landscape_objective(stale, TRAP) == 1.0 + 1.0 + 101.0 + 101.0


# =============================================================================
# K-means
# =============================================================================


def test_kmeans_trap_local_minimum():
    result = kmeans(TRAP, _centroids([[0, 0], [0, 2]]))
    assert result.centroids.coords.tolist() == [[5.0, 0.0], [5.0, 2.0]]
    assert result.objective == 100.0
    assert not result.centroids.has_degenerate


def test_kmeans_fixed_point():
    start = _centroids([[0, 1], [10, 1]])
    result = kmeans(TRAP, start)
    assert result.objective == 4.0
    assert result.centroids.same_as(start)
    assert result.iterations == 2


def test_kmeans_trace_is_monotone():
    rng = np.random.default_rng(11)
    for _ in range(200):
        s = int(rng.integers(2, 40))
        p = int(rng.integers(1, min(s, 6) + 1))
        points = rng.normal(size=(s, 2)) * rng.uniform(0.1, 10.0)
        start = CentroidSet.from_coords(points[rng.choice(s, size=p, replace=False)])
        trace = kmeans(points, start, tol=0.0).trace
        for before, after in zip(trace, trace[1:]):
            assert after <= before * (1 + 1e-12) + 1e-12


def test_kmeans_centroids_are_means_at_convergence():
    rng = np.random.default_rng(3)
    points = np.vstack([rng.normal(c, 0.3, size=(30, 2)) for c in ([0, 0], [5, 5], [0, 5])])
    result = kmeans(points, CentroidSet.from_coords(points[[0, 30, 60]]), tol=0.0)
    assert not result.centroids.has_degenerate
    for j in range(3):
        mean = points[result.labels == j].mean(axis=0)
        assert np.allclose(result.centroids.coords[j], mean, rtol=1e-9, atol=1e-12)


def test_kmeans_flags_emptied_cluster():
    points = np.array([[0.0], [1.0]])
    result = kmeans(points, _centroids([[0.5], [100.0]]))
    assert result.centroids.degenerate.tolist() == [False, True]
    assert result.centroids.coords[1, 0] == 100.0


def test_kmeans_preconditions():
    with pytest.raises(EmptySampleError):
        kmeans(np.zeros((0, 2)), _centroids([[0, 0]]))
    with pytest.raises(DegenerateCentroidError):
        kmeans(TRAP, CentroidSet.all_degenerate(2, 2))


# =============================================================================
# K-means++
# =============================================================================


def test_kmeanspp_single_point():
    rng = np.random.default_rng(0)
    seeded = kmeanspp_init(np.array([[3.0, 4.0]]), 1, None, rng)
    assert seeded.centroids.coords.tolist() == [[3.0, 4.0]]
    assert not seeded.fallback


def test_kmeanspp_puts_all_mass_on_far_point():
    existing = _centroids([[0, 0]])
    points = np.array([[0.0, 0.0], [10.0, 0.0]])
    for seed in range(20):
        seeded = kmeanspp_init(points, 1, existing, np.random.default_rng(seed))
        assert seeded.centroids.coords.tolist() == [[0.0, 0.0], [10.0, 0.0]]


def test_kmeanspp_d_squared_law():
    points = np.array([[0.0], [1.0], [3.0]])
    existing = _centroids([[0.0]])
    rng = np.random.default_rng(2024)
    draws = 10_000
    far = 0
    for _ in range(draws):
        seeded = kmeanspp_init(points, 1, existing, rng)
        far += seeded.centroids.coords[1, 0] == 3.0
    assert abs(far / draws - 0.9) < 0.02


def test_kmeanspp_support_property():
    rng = np.random.default_rng(5)
    points = rng.normal(size=(50, 3))
    seeded = kmeanspp_init(points, 6, None, rng)
    assert not seeded.centroids.has_degenerate
    for row in seeded.centroids.coords:
        assert any(np.array_equal(row, point) for point in points)


def test_kmeanspp_fallback_when_points_coincide():
    points = np.array([[1.0, 1.0], [1.0, 1.0]])
    seeded = kmeanspp_init(points, 2, _centroids([[1, 1]]), np.random.default_rng(0))
    assert seeded.fallback
    assert seeded.centroids.p == 3
    assert not seeded.centroids.has_degenerate


def test_repair_touches_only_degenerate_slots():
    start = CentroidSet(np.array([[0.0, 0.0], [np.nan, np.nan]]), np.array([False, True]))
    repaired = repair_degenerate(start, TRAP, np.random.default_rng(1)).centroids
    assert repaired.coords[0].tolist() == [0.0, 0.0]
    assert any(np.array_equal(repaired.coords[1], point) for point in TRAP)
    assert not repaired.has_degenerate

    healthy = _centroids([[0, 0], [1, 1]])
    assert repair_degenerate(healthy, TRAP, np.random.default_rng(1)).centroids is healthy


def test_kmeanspp_empty_sample():
    with pytest.raises(EmptySampleError):
        kmeanspp_init(np.zeros((0, 2)), 1, None, np.random.default_rng(0))


# =============================================================================
# Oracle
# =============================================================================


def test_restricted_growth_strings_count_partitions():
    # Partitions of 5 items into at most 3 blocks: S(5,1) + S(5,2) + S(5,3) = 1 + 15 + 25
    assert restricted_growth_strings(5, 3).shape == (41, 5)
    assert restricted_growth_strings(4, 1).tolist() == [[0, 0, 0, 0]]


def test_oracle_trap_optimum():
    centroids, value = brute_force_mssc(TRAP, 2)
    assert value == 4.0
    assert sorted(centroids.coords.tolist()) == [[0.0, 1.0], [10.0, 1.0]]


def test_oracle_p_equals_s_is_zero():
    points = np.array([[0.0, 1.0], [3.0, -2.0], [7.5, 0.25]])
    _, value = brute_force_mssc(points, 3)
    assert value == 0.0


def test_oracle_single_cluster_is_total_scatter():
    rng = np.random.default_rng(9)
    points = rng.normal(size=(9, 2))
    _, value = brute_force_mssc(points, 1)
    assert np.isclose(value, np.sum((points - points.mean(axis=0)) ** 2), rtol=1e-12)


def test_oracle_bounds():
    with pytest.raises(EnumerationBoundError):
        brute_force_mssc(np.zeros((13, 1)), 2)
    with pytest.raises(EnumerationBoundError):
        brute_force_mssc(np.zeros((5, 1)), 4)


def test_oracle_dominates_kmeans_from_every_start():
    rng = np.random.default_rng(17)
    for _ in range(25):
        s = int(rng.integers(3, 9))
        p = int(rng.integers(1, 4))
        points = rng.uniform(0, 10, size=(s, 2))
        optimal, value = brute_force_mssc(points, p)
        slack = 1e-9 * max(1.0, value)
        for subset in itertools.combinations(range(s), p):
            result = kmeans(points, CentroidSet.from_coords(points[list(subset)]), tol=0.0)
            assert result.objective >= value - slack
        assert abs(kmeans(points, optimal, tol=0.0).objective - value) <= slack


def test_translation_equivariance():
    rng = np.random.default_rng(23)
    for _ in range(20):
        points = rng.uniform(-5, 5, size=(int(rng.integers(3, 9)), 2))
        shift = rng.uniform(-100, 100, size=2)
        p = int(rng.integers(1, 4))
        base, value = brute_force_mssc(points, p)
        moved, moved_value = brute_force_mssc(points + shift, p)
        assert np.isclose(moved_value, value, rtol=1e-9, atol=1e-9)
        assert np.allclose(moved.coords, base.coords + shift, atol=1e-6)
