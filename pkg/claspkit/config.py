"""Runtime configuration read from the environment"""
import logging
import os
from pathlib import Path
from typing import Mapping, Optional

from pydantic import BaseModel, Field, ValidationError

from claspkit.errors import ConfigError

ENV_PREFIX = "CLASPKIT_"


class Settings(BaseModel):
    """Settings shared by the CLI and the HTTP service"""
    memo_path: Optional[Path] = None
    memo_sample: int = Field(default=5, ge=0)
    grid: int = Field(default=12, ge=0)
    log_level: str = "WARNING"
    seed: int = 0

    @classmethod
    def from_env(cls, environ: Optional[Mapping[str, str]] = None) -> "Settings":
        """Build settings from CLASPKIT_* variables"""
        env = os.environ if environ is None else environ
        values = {}
        for field in ("memo_path", "memo_sample", "grid", "log_level", "seed"):
            raw = env.get(ENV_PREFIX + field.upper())
            if raw is not None and raw != "":
                values[field] = raw
        try:
            settings = cls(**values)
        except ValidationError as e:
            raise ConfigError(f"Invalid configuration: {e}") from e
        if logging.getLevelName(settings.log_level.upper()) not in (
            logging.DEBUG, logging.INFO, logging.WARNING, logging.ERROR, logging.CRITICAL
        ):
            raise ConfigError(f"Unknown log level '{settings.log_level}'")
        return settings


def configure_logging(settings: Settings, verbose: bool = False) -> None:
    level = logging.INFO if verbose else getattr(logging, settings.log_level.upper())
    logging.basicConfig(
        level=level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
