"""Shared utilities."""
from src.utils.logging import setup_logger
from src.utils.settings import Settings, get_settings

__all__ = [
    "setup_logger",
    "Settings",
    "get_settings",
]
