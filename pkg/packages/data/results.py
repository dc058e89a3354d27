"""Result documents (JSON) with label and history sidecars.

A run writes three files next to each other:
    <stem>.json          the ResultDocument
    <stem>.labels.txt    one cluster index per line
    <stem>.history.csv   one row per iteration
"""

import csv
import json
import math
from pathlib import Path
from typing import Any

try:
    from typing import Self
except ImportError:  # Python < 3.11
    from typing_extensions import Self

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from core.errors import SchemaVersionError
from core.models import HistoryRow, Phase

SCHEMA_VERSION = 1
HISTORY_COLUMNS = ["t", "phase", "k", "sample_size", "objective", "improved", "elapsed_ms"]


class ResultDocument(BaseModel):
    """Outcome of one clustering run."""

    model_config = ConfigDict(ser_json_inf_nan="constants")

    schema_version: int = SCHEMA_VERSION
    algorithm: str
    config: dict[str, Any] = Field(default_factory=dict, description="Echo of the run configuration")
    dataset: str
    rows: int
    cols: int
    centroids: list[list[float]]
    objective: float
    labels_path: str | None = None
    history: list[HistoryRow] = Field(default_factory=list)
    seed: int
    wall_seconds: float = 0.0
    s_opt: int | None = None
    seeding_fallbacks: int = 0
    unsuccessful_iterations: int = 0

    @model_validator(mode="after")
    def _check_fields(self) -> Self:
        if not math.isfinite(self.objective):
            raise ValueError(f"objective must be finite, got {self.objective}")
        if any(not math.isfinite(row.objective) for row in self.history):
            raise ValueError("history objectives must be finite")
        budget = self.config.get("iterations")
        if budget is not None and len(self.history) > budget:
            raise ValueError(f"history has {len(self.history)} rows for a budget of {budget}")
        return self


# =============================================================================
# Paths
# =============================================================================


def sidecar_paths(out_path: Path) -> tuple[Path, Path]:
    stem = out_path.with_suffix("")
    return stem.with_name(stem.name + ".labels.txt"), stem.with_name(stem.name + ".history.csv")


# =============================================================================
# Read / Write
# =============================================================================


def write_result(doc: ResultDocument, out_path: str | Path, labels: np.ndarray | None = None) -> Path:
    """Write the document, its history CSV and (if given) the labels sidecar."""
    out_path = Path(out_path)
    out_path.parent.mkdir(parents=True, exist_ok=True)
    labels_file, history_file = sidecar_paths(out_path)
    if labels is not None:
        doc = doc.model_copy(update={"labels_path": labels_file.name})
        write_labels(labels, labels_file)
    write_history_csv(doc.history, history_file)
    out_path.write_text(doc.model_dump_json(indent=2) + "\n", encoding="utf-8")
    return out_path


def read_result(path: str | Path) -> ResultDocument:
    raw = json.loads(Path(path).read_text(encoding="utf-8"))
    if not isinstance(raw, dict) or "schema_version" not in raw:
        raise SchemaVersionError(f"{path}: missing schema_version")
    if raw["schema_version"] != SCHEMA_VERSION:
        raise SchemaVersionError(
            f"{path}: unsupported schema_version {raw['schema_version']!r} (expected {SCHEMA_VERSION})"
        )
    try:
        return ResultDocument.model_validate(raw)
    except ValidationError as e:
        raise ValueError(f"{path}: invalid result document: {e}") from e


def write_labels(labels: np.ndarray, path: str | Path) -> Path:
    path = Path(path)
    path.write_text("".join(f"{int(label)}\n" for label in labels), encoding="utf-8")
    return path


def read_labels(path: str | Path) -> np.ndarray:
    """Labels from a sidecar file, or from the sidecar named by a result document."""
    path = Path(path)
    if path.suffix == ".json":
        doc = read_result(path)
        if doc.labels_path is None:
            raise ValueError(f"{path}: document has no labels file")
        path = path.parent / doc.labels_path
    lines = path.read_text(encoding="utf-8").split()
    return np.array([int(line) for line in lines], dtype=np.int64)


def write_history_csv(rows: list[HistoryRow], path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(HISTORY_COLUMNS)
        for row in rows:
            writer.writerow(
                [
                    row.t,
                    row.phase.value,
                    row.k,
                    row.sample_size,
                    repr(row.objective),
                    "true" if row.improved else "false",
                    repr(row.elapsed_ms),
                ]
            )
    return path


def read_history_csv(path: str | Path) -> list[HistoryRow]:
    with open(path, newline="", encoding="utf-8") as f:
        reader = csv.DictReader(f)
        if reader.fieldnames != HISTORY_COLUMNS:
            raise ValueError(f"{path}: expected columns {HISTORY_COLUMNS}, got {reader.fieldnames}")
        return [
            HistoryRow(
                t=int(record["t"]),
                phase=Phase(record["phase"]),
                k=int(record["k"]),
                sample_size=int(record["sample_size"]),
                objective=float(record["objective"]),
                improved=record["improved"] == "true",
                elapsed_ms=float(record["elapsed_ms"]),
            )
            for record in reader
        ]
