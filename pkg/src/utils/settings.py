"""Environment-driven settings."""
import os
from pathlib import Path
from typing import Optional

from dotenv import load_dotenv
from pydantic import BaseModel, Field

load_dotenv()

RULES_ENV_VAR = "FUZZY_HARNESS_RULES"


class Settings(BaseModel):
    """Process-wide settings read from the environment (and a .env file, if present)."""
    rules_path: Optional[Path] = Field(None, description="Default rules file for the controller")
    log_level: str = "INFO"


def get_settings() -> Settings:
    """
    Read settings from the environment.

    Returns:
        Settings instance; unset variables keep their defaults
    """
    rules = os.getenv(RULES_ENV_VAR)
    return Settings(
        rules_path=Path(rules) if rules else None,
        log_level=os.getenv("LOG_LEVEL", "INFO"),
    )
