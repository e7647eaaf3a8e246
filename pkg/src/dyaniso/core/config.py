import logging
from functools import lru_cache

from pydantic_settings import BaseSettings, SettingsConfigDict

logger = logging.getLogger(__name__)


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_file=".env", env_prefix="DYANISO_", extra="ignore"
    )

    PROJECT_NAME: str = "dyaniso"

    # Default directory for CSV/JSON output; relative paths resolve against the cwd
    OUTPUT_DIR: str = "./dyaniso_output"

    # Thread pool width for per-block and per-energy work
    MAX_WORKERS: int = 4

    LOG_LEVEL: str = "WARNING"

    # Nine significant digits
    FLOAT_FORMAT: str = "%.8e"


@lru_cache
def get_settings() -> Settings:
    logger.debug("Loading settings...")
    return Settings()
