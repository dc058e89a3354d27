"""Benchmark harness: an algorithm against best-of-K K-means++ restarts.

Usage:
    from eval.benchmark import run_bench

    report = run_bench(dataset, cfg, seeds=range(10), restarts=10, out_dir=Path("results/bench"))
    print(format_table(report))
"""

import csv
import logging
import statistics
import time
from collections.abc import Iterable
from dataclasses import dataclass, field
from pathlib import Path

from bigmeans import RUNNERS
from bigmeans.structures import BigMeansConfig
from core.database import get_session, init_db
from core.db_models import BenchRun
from data.results import write_history_csv
from mssc.dataset import Dataset
from mssc.kmeans import kmeans
from mssc.objective import mssc_objective
from mssc.seeding import kmeanspp_init
from vls.streams import StreamPurpose, derive_generator

logger = logging.getLogger(__name__)


# =============================================================================
# Result Types
# =============================================================================


@dataclass
class BaselineResult:
    objective: float
    wall_seconds: float
    restart_objectives: list[float] = field(default_factory=list)


@dataclass
class BenchRow:
    seed: int
    objective: float
    wall_seconds: float
    baseline_objective: float
    baseline_wall_seconds: float
    history_path: Path | None = None

    @property
    def relative_gap(self) -> float:
        return (self.objective - self.baseline_objective) / self.baseline_objective


@dataclass
class BenchReport:
    suite: str
    algorithm: str
    rows: list[BenchRow] = field(default_factory=list)
    table_path: Path | None = None

    def median_objective(self) -> float:
        return statistics.median(row.objective for row in self.rows)

    def best_objective(self) -> float:
        return min(row.objective for row in self.rows)

    def median_wall(self) -> float:
        return statistics.median(row.wall_seconds for row in self.rows)

    def median_baseline_objective(self) -> float:
        return statistics.median(row.baseline_objective for row in self.rows)

    def best_baseline_objective(self) -> float:
        return min(row.baseline_objective for row in self.rows)

    def median_baseline_wall(self) -> float:
        return statistics.median(row.baseline_wall_seconds for row in self.rows)


# =============================================================================
# Baseline
# =============================================================================


def baseline_kmeanspp(
    dataset: Dataset,
    clusters: int,
    restarts: int,
    seed: int,
    tol: float | None = None,
    max_iter: int | None = None,
) -> BaselineResult:
    """Best full-data objective over `restarts` K-means runs from K-means++ seeds."""
    started = time.perf_counter()
    objectives = []
    for restart in range(restarts):
        rng = derive_generator(seed, restart, StreamPurpose.INIT)
        init = kmeanspp_init(dataset.values, clusters, None, rng).centroids
        result = kmeans(dataset.values, init, tol, max_iter)
        objectives.append(mssc_objective(result.centroids.with_flags_cleared(), dataset.values))
    return BaselineResult(min(objectives), time.perf_counter() - started, objectives)


# =============================================================================
# Harness
# =============================================================================


def run_bench(
    dataset: Dataset,
    cfg: BigMeansConfig,
    seeds: Iterable[int],
    restarts: int = 10,
    out_dir: Path | None = None,
    ledger_url: str | None = None,
    suite: str = "mixture",
) -> BenchReport:
    """Run the configured algorithm and the baseline once per seed."""
    runner = RUNNERS[cfg.algorithm]
    report = BenchReport(suite=suite, algorithm=cfg.algorithm.value)
    if ledger_url is not None:
        init_db(ledger_url)

    for seed in seeds:
        run_cfg = cfg.model_copy(update={"seed": seed})
        result = runner(dataset, run_cfg)
        baseline = baseline_kmeanspp(
            dataset, cfg.clusters, restarts, seed, cfg.kmeans_tol, cfg.kmeans_max_iter
        )
        row = BenchRow(
            seed=seed,
            objective=result.objective,
            wall_seconds=result.wall_seconds,
            baseline_objective=baseline.objective,
            baseline_wall_seconds=baseline.wall_seconds,
        )
        if out_dir is not None:
            row.history_path = write_history_csv(
                result.record.rows, out_dir / f"history_{cfg.algorithm.value}_seed{seed}.csv"
            )
        report.rows.append(row)
        logger.info(
            "seed %d: %s=%.6g (%.3fs), baseline=%.6g (%.3fs)",
            seed,
            cfg.algorithm.value,
            row.objective,
            row.wall_seconds,
            row.baseline_objective,
            row.baseline_wall_seconds,
        )
        if ledger_url is not None:
            record_runs(suite, run_cfg, row, restarts)

    if out_dir is not None:
        report.table_path = write_table_csv(report, out_dir / "bench_table.csv")
    return report


def record_runs(suite: str, cfg: BigMeansConfig, row: BenchRow, restarts: int) -> None:
    """Store the algorithm run and its baseline in the run ledger."""
    with get_session() as session:
        session.add(
            BenchRun(
                suite=suite,
                algorithm=cfg.algorithm.value,
                seed=row.seed,
                clusters=cfg.clusters,
                sample_size=cfg.size_bounds()[1],
                iterations=cfg.iterations,
                objective=row.objective,
                wall_seconds=row.wall_seconds,
            )
        )
        session.add(
            BenchRun(
                suite=suite,
                algorithm=f"kmeans++x{restarts}",
                seed=row.seed,
                clusters=cfg.clusters,
                sample_size=None,
                iterations=None,
                objective=row.baseline_objective,
                wall_seconds=row.baseline_wall_seconds,
            )
        )


# =============================================================================
# Reporting
# =============================================================================

TABLE_COLUMNS = [
    "seed",
    "objective",
    "wall_seconds",
    "baseline_objective",
    "baseline_wall_seconds",
    "relative_gap",
]


def write_table_csv(report: BenchReport, path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="", encoding="utf-8") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(TABLE_COLUMNS)
        for row in report.rows:
            writer.writerow(
                [
                    row.seed,
                    repr(row.objective),
                    repr(row.wall_seconds),
                    repr(row.baseline_objective),
                    repr(row.baseline_wall_seconds),
                    repr(row.relative_gap),
                ]
            )
    return path


def format_table(report: BenchReport) -> str:
    lines = [
        f"{'seed':>6} {'objective':>14} {'wall s':>9} {'baseline':>14} {'base s':>9} {'rel gap':>10}",
        "-" * 67,
    ]
    for row in report.rows:
        lines.append(
            f"{row.seed:>6} {row.objective:>14.6g} {row.wall_seconds:>9.3f} "
            f"{row.baseline_objective:>14.6g} {row.baseline_wall_seconds:>9.3f} {row.relative_gap:>+10.2%}"
        )
    lines.append("-" * 67)
    lines.append(
        f"{'median':>6} {report.median_objective():>14.6g} {report.median_wall():>9.3f} "
        f"{report.median_baseline_objective():>14.6g} {report.median_baseline_wall():>9.3f}"
    )
    lines.append(f"{'best':>6} {report.best_objective():>14.6g} {'':>9} {report.best_baseline_objective():>14.6g}")
    return "\n".join(lines)
