"""
Configuration management using Pydantic Settings.
Loads environment variables (prefix DYNMIS_) and an optional .env file.
"""

from pydantic_settings import BaseSettings, SettingsConfigDict
from typing import Optional


class Settings(BaseSettings):
    """Run-level settings; every CLI flag defaults to one of these."""

    model_config = SettingsConfigDict(
        env_prefix="DYNMIS_", env_file=".env", case_sensitive=True, extra="ignore"
    )

    # Replay
    ENGINE: str = "oneswap"
    GRAPH: Optional[str] = None
    OPS: Optional[str] = None
    GEN_OPS: int = 0
    MIX: str = "0.1,0.1,0.4,0.4"
    INIT: str = "greedy"
    INIT_FILE: Optional[str] = None
    CHECK_EVERY: int = 0
    LENIENT: bool = False
    SEED: int = 0
    REPEAT: int = 1
    PLR: Optional[str] = None
    CSV_OUT: Optional[str] = None

    # Oracles
    ORACLE_CAP: int = 40
    NAIVE_CAP: int = 24
    CERTIFY_SUBSET_CAP: int = 200_000
    CHECK_VERTEX_CAP: int = 5000

    # Generators
    PLR_MAX_RETRIES: int = 64
    STREAM_MAX_RESAMPLE: int = 32

    # Logging
    LOG_CONFIG: str = "logging.ini"
    LOG_LEVEL: str = "WARNING"


settings = Settings()
