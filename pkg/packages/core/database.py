"""Database connection and session management for the benchmark run ledger.

The ledger is optional. It works with SQLite (default, a file next to the
benchmark outputs) or any SQLAlchemy URL such as PostgreSQL.

Usage:
    from core.database import get_session, init_db

    init_db()
    with get_session() as session:
        runs = session.query(BenchRun).all()
"""

import os
from collections.abc import Generator
from contextlib import contextmanager

from sqlalchemy import Engine, create_engine
from sqlalchemy.orm import Session, declarative_base, sessionmaker

from core.settings import get_settings

# Base class for SQLAlchemy models
Base = declarative_base()

LEDGER_FILENAME = "ledger.db"


def get_database_url() -> str:
    """Ledger URL from settings, or a SQLite file inside the output directory."""
    settings = get_settings()
    if settings.ledger_url:
        return settings.ledger_url
    return f"sqlite:///{settings.output_dir / LEDGER_FILENAME}"


# Create engine (lazy initialization)
_engine: Engine | None = None
_SessionLocal: sessionmaker[Session] | None = None
_bound_url: str | None = None


def get_engine(url: str | None = None) -> Engine:
    """Get or create the database engine.

    Passing a URL different from the one currently bound rebinds the engine.
    """
    global _engine, _SessionLocal, _bound_url
    database_url = url or _bound_url or get_database_url()
    if _engine is not None and database_url != _bound_url:
        reset_engine()
    if _engine is None:
        connect_args = {}
        if database_url.startswith("sqlite"):
            connect_args["check_same_thread"] = False

        _engine = create_engine(
            database_url,
            connect_args=connect_args,
            echo=os.environ.get("SQL_DEBUG", "").lower() == "true",
        )
        _bound_url = database_url
    return _engine


def get_session_factory() -> sessionmaker[Session]:
    """Get or create the session factory."""
    global _SessionLocal
    if _SessionLocal is None:
        _SessionLocal = sessionmaker(
            autocommit=False,
            autoflush=False,
            bind=get_engine(),
        )
    return _SessionLocal


@contextmanager
def get_session() -> Generator[Session, None, None]:
    """Get a database session as a context manager, committing on success."""
    SessionLocal = get_session_factory()
    session = SessionLocal()
    try:
        yield session
        session.commit()
    except Exception:
        session.rollback()
        raise
    finally:
        session.close()


def init_db(url: str | None = None) -> None:
    """Create ledger tables if they don't exist."""
    from core.db_models import BenchRun  # noqa: F401  (registers the table)

    Base.metadata.create_all(bind=get_engine(url))


def reset_engine() -> None:
    """Reset the engine and session factory (useful for testing)."""
    global _engine, _SessionLocal, _bound_url
    if _engine is not None:
        _engine.dispose()
    _engine = None
    _SessionLocal = None
    _bound_url = None
