"""Resolve the engine and track a command runs with."""
from pathlib import Path
from typing import Optional

from src.controller.schemas import TrackBounds
from src.controller.treadmill import (
    build_treadmill_controller,
    default_paper_controller,
    treadmill_symbol_table,
)
from src.core.engine import MamdaniEngine
from src.rules.parser import RuleParser
from src.simulation.schemas import TrackKind, TrackPath
from src.simulation.tracks import generate_dummy_track, load_track_file
from src.utils.logging import setup_logger
from src.utils.settings import get_settings

logger = setup_logger(__name__)

TRACK_FILE_PREFIX = "@"


def resolve_rules_path(rules: Optional[Path]) -> Optional[Path]:
    """
    Rules file to use: the flag, else the configured default, else None (embedded rules).

    Args:
        rules: Value of --rules

    Returns:
        Path or None
    """
    return rules or get_settings().rules_path


def get_engine(rules: Optional[Path] = None) -> MamdaniEngine:
    """
    Get the controller for a command.

    Args:
        rules: Value of --rules

    Returns:
        MamdaniEngine built around the selected rule file, or the shared default controller

    Raises:
        OSError: If the rule file cannot be read
        RuleError: If the rule file does not parse
    """
    path = resolve_rules_path(rules)
    if path is None:
        return default_paper_controller()

    rule_base = RuleParser(treadmill_symbol_table()).parse_file(path.read_text(encoding="utf-8"))
    logger.info(f"Using {len(rule_base)} rules from {path}")
    return build_treadmill_controller(rule_base)


def get_track(track: str, bounds: TrackBounds, seed: int = 0) -> TrackPath:
    """
    Get the track named on the command line.

    Args:
        track: Built-in kind, or @path to a waypoint CSV
        bounds: Track bounds
        seed: Run seed

    Returns:
        TrackPath

    Raises:
        InvalidInputError: If a track file is unusable
        ValueError: If the kind is unknown
    """
    if track.startswith(TRACK_FILE_PREFIX):
        return load_track_file(track[len(TRACK_FILE_PREFIX):])
    try:
        kind = TrackKind(track)
    except ValueError:
        choices = ", ".join(k.value for k in TrackKind)
        raise ValueError(f"Unknown track {track!r}; choose {choices} or @file") from None
    return generate_dummy_track(kind, bounds, seed)
