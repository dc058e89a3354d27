"""SQLAlchemy models for the benchmark run ledger."""

from datetime import datetime, timezone
from typing import Any

from sqlalchemy import Column, DateTime, Float, Integer, String

from core.database import Base


class BenchRun(Base):
    """One algorithm run (or one baseline run) of a benchmark suite."""

    __tablename__ = "bench_runs"

    id = Column(Integer, primary_key=True, autoincrement=True)
    suite = Column(String, nullable=False, index=True)
    algorithm = Column(String, nullable=False)
    seed = Column(Integer, nullable=False)
    clusters = Column(Integer, nullable=False)
    sample_size = Column(Integer, nullable=True)
    iterations = Column(Integer, nullable=True)
    objective = Column(Float, nullable=False)
    wall_seconds = Column(Float, nullable=False)
    created_at = Column(DateTime, default=lambda: datetime.now(timezone.utc))

    def to_dict(self) -> dict[str, Any]:
        return {
            "id": self.id,
            "suite": self.suite,
            "algorithm": self.algorithm,
            "seed": self.seed,
            "clusters": self.clusters,
            "sample_size": self.sample_size,
            "iterations": self.iterations,
            "objective": self.objective,
            "wall_seconds": self.wall_seconds,
            "created_at": self.created_at.isoformat() if self.created_at else None,
        }
