import os
from typing import Optional, Union
from pydantic import field_validator
from pydantic_settings import BaseSettings

from .. import __version__


class Settings(BaseSettings):
    # Project
    PROJECT_NAME: str = "csmcheck"
    PROJECT_DESCRIPTION: str = "Exact CSM/SSM classes and positivity checks"
    VERSION: str = __version__

    # Environment
    ENV: str = os.getenv("ENV", "development")

    # Logging
    LOG_LEVEL: str = os.getenv("LOG_LEVEL", "INFO")
    LOG_FORMAT: str = "<green>{time:HH:mm:ss}</green> | <level>{level: <8}</level> | {name}:{function} - {message}"

    @field_validator("LOG_LEVEL", mode="before")
    def normalize_log_level(cls, v):
        if not v:
            return "INFO"
        return str(v).strip().upper()

    # Littlewood-Richardson memo bound; None keeps every entry
    LR_CACHE_SIZE: Optional[int] = None

    @field_validator("LR_CACHE_SIZE", mode="before")
    def parse_cache_size(cls, v: Union[str, int, None]):
        if v is None or v == "":
            return None
        if isinstance(v, str) and v.lower() in ("none", "unbounded"):
            return None
        return int(v)

    # Resource bounds
    MAX_PROJECTIVE_DIM: int = 64

    # Embedded data
    FIXTURE_PACKAGE: str = "csmcheck.data.fixtures"
    SAMPLE_PACKAGE: str = "csmcheck.data.samples"

    model_config = {
        "env_file": ".env",
        "case_sensitive": True,
        "extra": "ignore",
    }


settings = Settings()
