"""Landscape Search Core - Shared models, errors, settings, and utilities."""

# Pydantic models (configuration and run records)
from .models import (
    Budget,
    ChangeScheme,
    Formulation,
    FormulationKind,
    HistoryRow,
    NeighborhoodAxis,
    NeighborhoodSpec,
    Phase,
    RunRecord,
    ShakeBounds,
    VlsConfig,
)

# Exceptions
from .errors import (
    BudgetError,
    DatasetFormatError,
    DatasetNotLoadedError,
    DegenerateCentroidError,
    DegenerateNeighborhoodError,
    EmptySampleError,
    EnumerationBoundError,
    SchemaVersionError,
    UnknownFormulationError,
    VlsError,
)

# Settings and logging
from .settings import Settings, get_settings, reset_settings
from .observability import configure_logging

# Database utilities (optional run ledger)
from .database import (
    get_session,
    get_engine,
    init_db,
    reset_engine,
    Base,
)
from .db_models import BenchRun

__all__ = [
    # Enums
    "FormulationKind",
    "NeighborhoodAxis",
    "Phase",
    "ChangeScheme",
    # Pydantic models
    "Formulation",
    "NeighborhoodSpec",
    "ShakeBounds",
    "Budget",
    "VlsConfig",
    "HistoryRow",
    "RunRecord",
    # Errors
    "VlsError",
    "UnknownFormulationError",
    "DatasetNotLoadedError",
    "DegenerateNeighborhoodError",
    "DegenerateCentroidError",
    "EmptySampleError",
    "EnumerationBoundError",
    "DatasetFormatError",
    "SchemaVersionError",
    "BudgetError",
    # Settings
    "Settings",
    "get_settings",
    "reset_settings",
    "configure_logging",
    # Database utilities
    "get_session",
    "get_engine",
    "init_db",
    "reset_engine",
    "Base",
    "BenchRun",
]
