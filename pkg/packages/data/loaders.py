"""Dataset files: CSV or whitespace-separated numeric matrices."""

import csv
import logging
import math
from pathlib import Path
from typing import Literal

import numpy as np

from core.errors import DatasetFormatError
from mssc.dataset import Dataset

logger = logging.getLogger(__name__)

DatasetFormat = Literal["csv", "whitespace"]


def _split(line: str, fmt: DatasetFormat) -> list[str]:
    if fmt == "csv":
        return [cell.strip() for cell in next(csv.reader([line]))]
    return line.split()


def load_dataset(
    path: str | Path,
    fmt: DatasetFormat = "csv",
    skip_header: bool = False,
    dataset_id: str | None = None,
) -> Dataset:
    """Parse a numeric matrix, rejecting non-numeric cells, NaN/inf and ragged rows.

    Blank lines are ignored. Errors name the 1-based line number.
    """
    path = Path(path)
    if fmt not in ("csv", "whitespace"):
        raise ValueError(f"unknown dataset format {fmt!r}")

    rows: list[list[float]] = []
    width: int | None = None
    with open(path, encoding="utf-8") as f:
        for line_no, raw in enumerate(f, start=1):
            if skip_header and line_no == 1:
                continue
            line = raw.strip()
            if not line:
                continue
            cells = _split(line, fmt)
            try:
                values = [float(cell) for cell in cells]
            except ValueError:
                bad = next(cell for cell in cells if not _is_number(cell))
                raise DatasetFormatError(f"non-numeric cell {bad!r}", line=line_no) from None
            if not all(math.isfinite(v) for v in values):
                raise DatasetFormatError("NaN or infinite value", line=line_no)
            if width is None:
                width = len(values)
            elif len(values) != width:
                raise DatasetFormatError(
                    f"ragged row: expected {width} columns, found {len(values)}", line=line_no
                )
            rows.append(values)

    if not rows:
        raise DatasetFormatError(f"empty file {path}")
    dataset = Dataset(dataset_id or path.stem, np.array(rows, dtype=np.float64))
    logger.info("Loaded %s: m=%d, n=%d", path, dataset.rows, dataset.cols)
    return dataset


def _is_number(cell: str) -> bool:
    try:
        float(cell)
    except ValueError:
        return False
    return True


def save_dataset(dataset: Dataset, path: str | Path, fmt: DatasetFormat = "csv") -> Path:
    """Write values with shortest round-trip float text, so reloading is exact."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    sep = "," if fmt == "csv" else " "
    with open(path, "w", encoding="utf-8") as f:
        for row in dataset.values:
            f.write(sep.join(repr(float(v)) for v in row) + "\n")
    return path
