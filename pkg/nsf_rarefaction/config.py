from functools import lru_cache
from typing import List

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Process-level settings, read from NSF_* environment variables or .env."""

    log_level: str = "INFO"
    output_dir: str = "results"

    # 0 runs one worker per eps value
    workers: int = Field(default=0, ge=0)
    cfl: float = Field(default=0.5, gt=0, le=1)
    default_eps: List[float] = [0.2, 0.1, 0.05, 0.025]

    model_config = SettingsConfigDict(env_prefix="NSF_", env_file=".env", extra="ignore")


@lru_cache()
def get_settings() -> Settings:
    return Settings()
