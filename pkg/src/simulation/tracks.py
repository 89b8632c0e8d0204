"""Dummy tracks and waypoint files."""
import csv
from pathlib import Path
from typing import List, Optional, Union

from pydantic import ValidationError

from src.controller.schemas import TrackBounds
from src.core.errors import InvalidInputError
from src.simulation.schemas import Point, TrackKind, TrackPath
from src.utils.logging import setup_logger

logger = setup_logger(__name__)

DRIFT_OVERSHOOT = 20.0
TRACK_INSET = 60.0
ZIGZAG_WAYPOINTS = 8
ZIGZAG_LEG_ADVANCE = 50.0


def generate_dummy_track(
    kind: Union[TrackKind, str],
    bounds: Optional[TrackBounds] = None,
    seed: int = 0
) -> TrackPath:
    """
    Build one of the built-in dummy tracks.

    drift_out walks from the centre straight out through the right boundary; lap is a
    rectangle inset 60 units from every boundary, starting and ending mid-rear; zigzag
    alternates between x = 60 and x = width - 60 while y advances 50 per leg from 60.

    Args:
        kind: Track kind
        bounds: Track bounds (500x500 when omitted)
        seed: Accepted so a run configuration can be passed through whole; the built-in
            shapes are fixed

    Returns:
        TrackPath
    """
    kind = TrackKind(kind)
    bounds = bounds or TrackBounds()
    w, d = bounds.width, bounds.depth
    inset = TRACK_INSET

    if kind is TrackKind.DRIFT_OUT:
        waypoints: List[Point] = [(w / 2, d / 2), (w + DRIFT_OVERSHOOT, d / 2)]
    elif kind is TrackKind.LAP:
        waypoints = [
            (w / 2, inset),
            (w - inset, inset),
            (w - inset, d - inset),
            (inset, d - inset),
            (inset, inset),
            (w / 2, inset),
        ]
    else:
        waypoints = [
            (inset if i % 2 == 0 else w - inset, inset + ZIGZAG_LEG_ADVANCE * i)
            for i in range(ZIGZAG_WAYPOINTS)
        ]

    logger.debug(f"Generated {kind.value} track with {len(waypoints)} waypoints (seed {seed})")
    return TrackPath(waypoints=tuple(waypoints))


def _is_number(cell: str) -> bool:
    try:
        float(cell)
    except ValueError:
        return False
    return True


def load_track_file(path: Union[str, Path]) -> TrackPath:
    """
    Read waypoints from a CSV file of `x,y` rows; a first row with no numeric cell is a header.

    Args:
        path: CSV file

    Returns:
        TrackPath

    Raises:
        InvalidInputError: If the file cannot be read or does not describe a valid track
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8-sig")
    except (OSError, UnicodeDecodeError) as e:
        raise InvalidInputError(f"Cannot read track file {path}: {e}") from e

    waypoints: List[Point] = []
    for number, row in enumerate(csv.reader(text.splitlines()), start=1):
        cells = [cell.strip() for cell in row]
        if not any(cells):
            continue
        if len(cells) != 2:
            raise InvalidInputError(f"{path}:{number}: expected 2 columns x,y, got {len(cells)}")
        numeric = [_is_number(cell) for cell in cells]
        if number == 1 and not any(numeric):
            continue
        if not all(numeric):
            raise InvalidInputError(f"{path}:{number}: non-numeric waypoint {row}")
        waypoints.append((float(cells[0]), float(cells[1])))

    try:
        track = TrackPath(waypoints=tuple(waypoints))
    except ValidationError as e:
        raise InvalidInputError(f"Invalid track in {path}: {e.errors()[0]['msg']}") from e

    logger.info(f"Loaded track file {path}: {len(track)} waypoints")
    return track
