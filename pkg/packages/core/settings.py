"""Process-level settings read from the environment (prefix ``VLS_``) or ``.env``.

Usage:
    from core.settings import get_settings

    out_dir = get_settings().output_dir
"""

from functools import lru_cache
from pathlib import Path

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Defaults for the CLI and the clustering kernel."""

    model_config = SettingsConfigDict(env_prefix="VLS_", env_file=".env", extra="ignore")

    output_dir: Path = Field(default=Path("results"), description="Default output directory")
    log_level: str = Field(default="WARNING")
    kmeans_tol: float = Field(default=1e-6, gt=0)
    kmeans_max_iter: int = Field(default=300, ge=1)
    ledger_url: str | None = Field(default=None, description="SQLAlchemy URL of the run ledger")


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return Settings()


def reset_settings() -> None:
    """Drop the cached settings (useful for testing)."""
    get_settings.cache_clear()
