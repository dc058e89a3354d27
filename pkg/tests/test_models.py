#!/usr/bin/env python3
"""Tests for the shared configuration models, settings and error types.

Run from the project root:

    poetry run pytest tests/test_models.py
"""

import sys
from pathlib import Path

# Add packages to path for development
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root / "packages"))

import pytest
from pydantic import ValidationError

from core.errors import DatasetFormatError, UnknownFormulationError, VlsError
from core.models import (
    Budget,
    HistoryRow,
    NeighborhoodAxis,
    NeighborhoodSpec,
    Phase,
    RunRecord,
    ShakeBounds,
    VlsConfig,
)
from core.settings import get_settings, reset_settings


# =============================================================================
# Neighborhood specs
# =============================================================================


def test_sample_size_radii_strictly_increase():
    spec = NeighborhoodSpec.sample_size(0, 6)
    radii = [spec.radius(k) for k in range(spec.k_min, spec.k_max + 1)]
    assert all(a < b for a, b in zip(radii, radii[1:]))
    assert spec.axis is NeighborhoodAxis.DATA


def test_non_increasing_radii_rejected():
    with pytest.raises(ValidationError):
        NeighborhoodSpec(axis=NeighborhoodAxis.DATA, k_min=0, k_max=2, radii=(0.0, 1.0, 1.0), distance_id="abs")
    with pytest.raises(ValidationError):
        NeighborhoodSpec(axis=NeighborhoodAxis.DATA, k_min=0, k_max=1, radii=(2.0, 1.0), distance_id="abs")


def test_radii_count_must_match_bounds():
    with pytest.raises(ValidationError):
        NeighborhoodSpec(axis=NeighborhoodAxis.DATA, k_min=1, k_max=3, radii=(1.0, 2.0), distance_id="abs")
    with pytest.raises(ValidationError):
        NeighborhoodSpec.sample_size(3, 1)


def test_radius_outside_bounds():
    spec = NeighborhoodSpec.formulation_index(1, 3)
    with pytest.raises(ValueError):
        spec.radius(0)
    assert spec.radius(3) == 3.0


# =============================================================================
# Engine configuration
# =============================================================================


def _config(**overrides) -> VlsConfig:
    values = {
        "shake_bounds": (ShakeBounds(k_min=0, k_max=2), ShakeBounds(k_min=0, k_max=1)),
        "quotas": (2, 1),
        "budget": Budget(max_iterations=10),
    }
    values.update(overrides)
    return VlsConfig(**values)


def test_config_defaults():
    config = _config()
    assert config.seed == 0
    assert config.workers == 1
    assert config.phase_stall_limit is None


def test_config_rejects_zero_quotas():
    with pytest.raises(ValidationError):
        _config(quotas=(0, 0))


def test_config_rejects_inverted_shake_bounds():
    with pytest.raises(ValidationError):
        ShakeBounds(k_min=3, k_max=1)


def test_budget_needs_a_positive_limit():
    with pytest.raises(ValidationError):
        Budget()
    with pytest.raises(ValidationError):
        Budget(max_iterations=0)
    with pytest.raises(ValidationError):
        Budget(max_seconds=-1.0)
    assert Budget(max_seconds=0.5).max_iterations is None


def test_config_rejects_zero_workers_and_large_seed():
    with pytest.raises(ValidationError):
        _config(workers=0)
    with pytest.raises(ValidationError):
        _config(seed=2**64)


def test_phase_index_round_trip():
    for phase in Phase:
        assert Phase.from_index(phase.index) is phase


# =============================================================================
# Run records
# =============================================================================


def test_trace_key_ignores_timing():
    a = HistoryRow(t=0, phase=Phase.DATA, k=0, sample_size=5, objective=1.5, improved=True, elapsed_ms=3.0)
    b = a.model_copy(update={"elapsed_ms": 99.0})
    assert a.trace_key() == b.trace_key()


def test_accepted_objectives():
    record = RunRecord(
        rows=[
            HistoryRow(t=0, phase=Phase.DATA, k=0, sample_size=5, objective=4.0, improved=True),
            HistoryRow(t=1, phase=Phase.DATA, k=0, sample_size=5, objective=4.0, improved=False),
            HistoryRow(t=2, phase=Phase.DATA, k=0, sample_size=5, objective=2.0, improved=True),
        ]
    )
    assert record.accepted_objectives() == [4.0, 2.0]
    assert len(record.acceptance_trace()) == 3


# =============================================================================
# Settings and errors
# =============================================================================


def test_settings_read_environment(monkeypatch, tmp_path):
    monkeypatch.setenv("VLS_OUTPUT_DIR", str(tmp_path / "out"))
    monkeypatch.setenv("VLS_KMEANS_MAX_ITER", "50")
    reset_settings()
    try:
        settings = get_settings()
        assert settings.output_dir == tmp_path / "out"
        assert settings.kmeans_max_iter == 50
        assert settings.kmeans_tol == 1e-6
    finally:
        reset_settings()


def test_error_messages():
    error = DatasetFormatError("ragged row", line=7)
    assert error.line == 7
    assert "line 7" in str(error)
    assert isinstance(error, VlsError)
    assert isinstance(error, ValueError)

    unknown = UnknownFormulationError(4)
    assert str(unknown) == "Formulation 4 is not registered"
    assert isinstance(unknown, KeyError)
