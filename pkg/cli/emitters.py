"""CSV and JSON output, written atomically."""
import csv
import io
import json
import os
import tempfile
from pathlib import Path
from typing import Iterable, Sequence, Union

from pydantic import BaseModel

from src.controller.treadmill import SurfacePoint
from src.simulation.schemas import TraceRecord
from src.utils.logging import setup_logger

logger = setup_logger(__name__)

TRACE_COLUMNS = (
    "step", "x", "y", "d_front", "d_rear", "d_left", "d_right",
    "steer_x", "steer_y", "cx", "cy", "status",
)
SURFACE_COLUMNS = ("x", "y", "steer_x", "steer_y")


def format_real(value: float) -> str:
    """Fixed six decimals; negative zero prints as zero."""
    text = f"{value:.6f}"
    return "0.000000" if text == "-0.000000" else text


def write_atomic(path: Union[str, Path], data: Union[str, bytes]) -> Path:
    """
    Write a file via a temporary sibling and a rename, so readers never see it half written.

    Args:
        path: Target file
        data: Text (UTF-8) or bytes

    Returns:
        The target path
    """
    path = Path(path)
    directory = path.parent if str(path.parent) else Path(".")
    payload = data.encode("utf-8") if isinstance(data, str) else data

    fd, tmp_name = tempfile.mkstemp(prefix=f".{path.name}.", suffix=".tmp", dir=directory)
    try:
        with os.fdopen(fd, "wb") as f:
            f.write(payload)
        os.replace(tmp_name, path)
    except BaseException:
        try:
            os.unlink(tmp_name)
        except FileNotFoundError:
            pass
        raise

    logger.info(f"Wrote {path} ({len(payload)} bytes)")
    return path


def _csv_text(header: Sequence[str], rows: Iterable[Sequence[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def trace_csv(trace: Iterable[TraceRecord]) -> str:
    """Trace as CSV text."""
    rows = (
        [str(r.step)]
        + [format_real(getattr(r, column)) for column in TRACE_COLUMNS[1:-1]]
        + [r.status.value]
        for r in trace
    )
    return _csv_text(TRACE_COLUMNS, rows)


def surface_csv(points: Iterable[SurfacePoint]) -> str:
    """Surface grid as CSV text."""
    rows = ([format_real(getattr(p, column)) for column in SURFACE_COLUMNS] for p in points)
    return _csv_text(SURFACE_COLUMNS, rows)


def write_trace_csv(path: Union[str, Path], trace: Iterable[TraceRecord]) -> Path:
    return write_atomic(path, trace_csv(trace))


def write_surface_csv(path: Union[str, Path], points: Iterable[SurfacePoint]) -> Path:
    return write_atomic(path, surface_csv(points))


def json_line(model: BaseModel) -> str:
    """Compact single-line JSON of a model, unset optional fields omitted."""
    return json.dumps(model.model_dump(mode="json", exclude_none=True))
