#!/usr/bin/env python3
"""Tests for landscapes, neighborhood structures, shaking and acceptance.

Run from the project root:

    poetry run pytest tests/test_landscape.py
"""

import sys
from pathlib import Path

# Add packages to path for development
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root / "packages"))

import numpy as np
import pytest
from scipy.stats import chisquare

from core.errors import DatasetNotLoadedError, DegenerateNeighborhoodError, UnknownFormulationError
from core.models import Formulation, Phase
from mssc.centroids import CentroidSet
from mssc.dataset import Dataset, DatasetCatalog, SampleRef
from mssc.objective import mssc_objective
from mssc.plugins import mssc_space
from vls.acceptance import accept, accept_values, registry_objectives
from vls.landscape import FormulationRegistry, evaluate_landscape, inverse_landscape
from vls.neighborhood_change import neighborhood_change_cyclic, neighborhood_change_sequential
from vls.neighborhoods import FULL_RANGE, DataNeighborhood, FormulationNeighborhood, shake_landscape
from vls.streams import RngStreams


def _space(rows: int = 1000, cols: int = 2, cluster_counts=(2,), seed: int = 0):
    rng = np.random.default_rng(seed)
    dataset = Dataset("pts", rng.normal(size=(rows, cols)))
    catalog = DatasetCatalog()
    catalog.add(dataset)
    registry = FormulationRegistry.mssc(list(cluster_counts))
    return dataset, registry, mssc_space(catalog, registry)


# =============================================================================
# Evaluation map
# =============================================================================


def test_full_dataset_landscape_matches_objective():
    dataset, registry, space = _space(rows=50)
    landscape = evaluate_landscape(dataset.full_sample(), registry.at(0), space)
    centroids = CentroidSet.from_coords(np.array([[0.0, 0.0], [1.0, -1.0]]))
    assert landscape.objective(centroids) == mssc_objective(centroids, dataset.values)
    assert landscape.feasible_region == "any 2x2 real matrix"


def test_empty_sample_landscape_is_zero():
    dataset, registry, space = _space(cluster_counts=(1,))
    landscape = evaluate_landscape(dataset.head_sample(0), registry.at(0), space)
    rng = np.random.default_rng(1)
    for _ in range(10):
        assert landscape.objective(CentroidSet.from_coords(rng.normal(size=(1, 2)))) == 0.0


def test_inverse_map_returns_originators():
    dataset, registry, space = _space(cluster_counts=(1, 2, 3))
    rng = np.random.default_rng(2)
    for _ in range(100):
        sample = dataset.draw_sample(int(rng.integers(0, 200)), rng)
        formulation = registry.at(int(rng.integers(registry.r)))
        sample_back, formulation_back = inverse_landscape(evaluate_landscape(sample, formulation, space))
        assert sample_back == sample
        assert formulation_back == formulation


def test_evaluation_errors():
    dataset, registry, space = _space()
    with pytest.raises(UnknownFormulationError):
        evaluate_landscape(dataset.full_sample(), Formulation(id=9, cluster_count=2), space)
    with pytest.raises(DatasetNotLoadedError):
        evaluate_landscape(SampleRef("missing", np.array([0, 1])), registry.at(0), space)


def test_sample_ref_sorts_and_deduplicates():
    sample = SampleRef("pts", np.array([5, 1, 5, 3]))
    assert sample.indices.tolist() == [1, 3, 5]
    assert sample.size == 3


# =============================================================================
# Data-axis neighborhoods
# =============================================================================


def test_data_neighborhoods_are_nested():
    neighborhood = DataNeighborhood.size_range(1, 1000, k_min=0, k_max=6)
    for s in (1, 2, 50, 998, 1000):
        for k in range(0, 6):
            inner = set(neighborhood.admissible_sizes(s, k))
            outer = set(neighborhood.admissible_sizes(s, k + 1))
            assert inner <= outer
            assert s in inner


def test_shake_k0_keeps_size_redraws_membership():
    dataset, registry, space = _space()
    landscape = evaluate_landscape(dataset.head_sample(100), registry.at(0), space)
    neighborhoods = (DataNeighborhood.fixed_size(100), FormulationNeighborhood.by_distance(registry, 0, 0))
    rngs = RngStreams(seed=3)
    shaken = shake_landscape(landscape, neighborhoods, 0, Phase.DATA, rngs)
    assert shaken.sample_size == 100
    assert shaken.sample != landscape.sample
    assert shaken.formulation == landscape.formulation


def test_shake_support_within_radius():
    dataset, registry, space = _space()
    neighborhood = DataNeighborhood.size_range(1, 1000, k_min=0, k_max=2)
    rngs = RngStreams(seed=4)
    sizes = {neighborhood.draw_size(100, 2, rngs.shaking) for _ in range(1000)}
    assert sizes == {98, 99, 100, 101, 102}

    landscape = evaluate_landscape(dataset.head_sample(100), registry.at(0), space)
    for _ in range(50):
        shaken = neighborhood.shake(landscape, 2, rngs)
        assert 98 <= shaken.sample_size <= 102
        assert shaken.formulation == landscape.formulation


def test_full_range_sizes_are_uniform():
    neighborhood = DataNeighborhood.size_range(20, 29)
    rng = np.random.default_rng(5)
    draws = [neighborhood.draw_size(20, FULL_RANGE, rng) for _ in range(10_000)]
    counts = np.bincount(np.array(draws) - 20, minlength=10)
    assert counts.sum() == 10_000
    assert chisquare(counts).pvalue > 0.01
    assert neighborhood.radius(FULL_RANGE) == 9.0


def test_empty_data_neighborhood():
    dataset, registry, space = _space()
    neighborhood = DataNeighborhood.size_range(10, 20, k_min=0, k_max=2)
    with pytest.raises(DegenerateNeighborhoodError):
        neighborhood.draw_size(5, 2, np.random.default_rng(0))

    oversized = DataNeighborhood.fixed_size(2000)
    landscape = evaluate_landscape(dataset.head_sample(100), registry.at(0), space)
    with pytest.raises(DegenerateNeighborhoodError):
        oversized.shake(landscape, 0, RngStreams(seed=0))


# =============================================================================
# Formulation-axis neighborhoods
# =============================================================================


def test_singleton_registry_shake_is_noop():
    dataset, registry, space = _space()
    landscape = evaluate_landscape(dataset.head_sample(30), registry.at(0), space)
    neighborhoods = (DataNeighborhood.fixed_size(30), FormulationNeighborhood.by_distance(registry, 0, 3))
    for k in range(4):
        shaken = shake_landscape(landscape, neighborhoods, k, Phase.FORMULATION, RngStreams(seed=k))
        assert shaken.formulation == landscape.formulation
        assert shaken.sample == landscape.sample


def test_formulation_candidates_by_distance_and_index():
    registry = FormulationRegistry.mssc([2, 3, 4, 5])
    by_distance = FormulationNeighborhood.by_distance(registry, 0, 2)
    assert [f.cluster_count for f in by_distance.candidates(registry.at(0), 0)] == [2]
    assert [f.cluster_count for f in by_distance.candidates(registry.at(0), 1)] == [2, 3]
    assert [f.cluster_count for f in by_distance.candidates(registry.at(2), 2)] == [2, 3, 4, 5]

    indexed = FormulationNeighborhood.indexed(registry)
    assert indexed.candidates(registry.at(3), 1) == [registry.at(0)]
    assert indexed.candidates(registry.at(0), 3) == [registry.at(2)]


def test_formulation_shake_keeps_sample():
    dataset, registry, space = _space(cluster_counts=(2, 3, 4))
    landscape = evaluate_landscape(dataset.head_sample(40), registry.at(1), space)
    neighborhoods = (DataNeighborhood.fixed_size(40), FormulationNeighborhood.by_distance(registry, 0, 1))
    rngs = RngStreams(seed=6)
    seen = set()
    for _ in range(50):
        shaken = shake_landscape(landscape, neighborhoods, 1, Phase.FORMULATION, rngs)
        assert shaken.sample == landscape.sample
        seen.add(shaken.formulation.id)
    assert seen == {0, 1, 2}


# =============================================================================
# Neighborhood change
# =============================================================================


class _Fixed:
    """Landscape stand-in whose objective looks values up by solution name."""

    def __init__(self, values):
        self.values = values

    def objective(self, x):
        return self.values[x]


def test_sequential_change_examples():
    old, new = object(), _Fixed({"x": 5.0, "x_new": 3.0})
    outcome = neighborhood_change_sequential("x", "x_new", old, new, 4, 1, 6)
    assert (outcome.x, outcome.landscape, outcome.k, outcome.improved) == ("x_new", new, 1, True)

    tie = _Fixed({"x": 5.0, "x_new": 5.0})
    outcome = neighborhood_change_sequential("x", "x_new", old, tie, 6, 1, 6)
    assert (outcome.x, outcome.landscape, outcome.k) == ("x", old, 1)

    outcome = neighborhood_change_sequential("x", "x_new", old, tie, 1, 1, 6)
    assert (outcome.x, outcome.k, outcome.improved) == ("x", 2, False)


def test_sequential_change_keeps_k_in_bounds():
    rng = np.random.default_rng(8)
    for _ in range(500):
        k_min = int(rng.integers(0, 4))
        k_max = k_min + int(rng.integers(0, 4))
        k = int(rng.integers(k_min, k_max + 1))
        values = _Fixed({"x": float(rng.integers(3)), "x_new": float(rng.integers(3))})
        outcome = neighborhood_change_sequential("x", "x_new", None, values, k, k_min, k_max)
        assert k_min <= outcome.k <= k_max


def test_cyclic_change():
    assert neighborhood_change_cyclic(2, 2, 5) == 3
    assert neighborhood_change_cyclic(5, 2, 5) == 2
    k, visited = 2, []
    for _ in range(2 * 4):
        visited.append(k)
        k = neighborhood_change_cyclic(k, 2, 5)
    assert sorted(visited) == [2, 2, 3, 3, 4, 4, 5, 5]


# =============================================================================
# Acceptance
# =============================================================================


def test_accept_values_examples():
    assert accept_values([3.0], [2.0])
    assert not accept_values([1.0, 4.0], [1.0, 7.0])
    assert not accept_values([1.0, 2.0, 3.0], [1.0, 2.0, 3.0])
    assert accept_values([1.0, 4.0, 0.0], [1.0, 3.0, 9.0])


def test_accept_matches_lexicographic_oracle():
    rng = np.random.default_rng(10)
    for _ in range(10_000):
        r = int(rng.integers(1, 5))
        current = rng.integers(0, 3, size=r).astype(float).tolist()
        candidate = rng.integers(0, 3, size=r).astype(float).tolist()
        assert accept_values(current, candidate) == (tuple(candidate) < tuple(current))


def test_single_formulation_accept_is_strict_improvement():
    dataset, registry, space = _space(rows=60)
    landscape = evaluate_landscape(dataset.full_sample(), registry.at(0), space)
    rng = np.random.default_rng(12)
    for _ in range(100):
        x = CentroidSet.from_coords(rng.normal(size=(2, 2)))
        x_new = CentroidSet.from_coords(rng.normal(size=(2, 2)))
        expected = landscape.objective(x_new) < landscape.objective(x)
        assert accept(x, x_new, landscape, registry) == expected
        assert not accept(x, x, landscape, registry)


def _line_landscape(cluster_counts):
    points = np.array([[0.0, 0.0], [1.0, 0.0], [10.0, 0.0], [11.0, 0.0]])
    catalog = DatasetCatalog()
    dataset = catalog.add(Dataset("line", points))
    registry = FormulationRegistry.mssc(list(cluster_counts))
    landscape = evaluate_landscape(dataset.full_sample(), registry.at(0), mssc_space(catalog, registry))
    return registry, landscape


def test_registry_objectives_use_each_formulation():
    registry, landscape = _line_landscape((1, 2, 3))
    x = CentroidSet.from_coords(np.array([[0.5, 0.0], [10.5, 0.0]]))
    assert registry_objectives(x, landscape, registry) == [201.0, 1.0, 1.0]


def test_accept_decided_by_second_formulation():
    registry, landscape = _line_landscape((1, 2))
    x = CentroidSet.from_coords(np.array([[0.5, 0.0], [5.0, 0.0]]))
    x_new = CentroidSet.from_coords(np.array([[0.5, 0.0], [10.5, 0.0]]))
    assert registry_objectives(x, landscape, registry) == [201.0, 61.5]
    assert registry_objectives(x_new, landscape, registry) == [201.0, 1.0]
    assert accept(x, x_new, landscape, registry)
    assert not accept(x_new, x, landscape, registry)
