"""SVG plots of trajectories and controller surfaces."""
import io
from typing import Optional, Sequence

import matplotlib
import matplotlib.patches as patches
import numpy as np
from matplotlib.figure import Figure

from src.controller.schemas import OUTPUT_HI, OUTPUT_LO, TrackBounds
from src.controller.treadmill import SurfacePoint
from src.simulation.schemas import TraceRecord, TraceStatus, TrackPath

PLOT_SIZE_PT = 500
POINTS_PER_INCH = 72
MARGIN_FRACTION = 0.05

# Fixed element ids and no timestamp: identical inputs give identical bytes.
SVG_RC = {"svg.hashsalt": "fuzzy-harness", "svg.fonttype": "none"}
SVG_METADATA = {"Date": None}


def _svg_bytes(fig: Figure) -> bytes:
    buffer = io.BytesIO()
    fig.savefig(buffer, format="svg", dpi=POINTS_PER_INCH, metadata=SVG_METADATA)
    return buffer.getvalue()


def _limits(lo: float, hi: float, values: Sequence[float]) -> tuple:
    margin = MARGIN_FRACTION * (hi - lo)
    return min([lo, *values]) - margin, max([hi, *values]) + margin


def trajectory_figure(
    trace: Sequence[TraceRecord],
    bounds: TrackBounds,
    path: Optional[TrackPath] = None
) -> Figure:
    """
    Plot a run: the track boundary, the waypoints, the patient's path and, if the run
    left the track, a red cross where it did.

    Args:
        trace: Simulation trace
        bounds: Track bounds
        path: Waypoints to draw under the trajectory

    Returns:
        Figure, 500x500 pt
    """
    xs = [r.x for r in trace]
    ys = [r.y for r in trace]
    size = PLOT_SIZE_PT / POINTS_PER_INCH

    fig = Figure(figsize=(size, size), dpi=POINTS_PER_INCH)
    ax = fig.add_subplot(111, aspect="equal")
    ax.add_patch(patches.Rectangle(
        (0.0, 0.0), bounds.width, bounds.depth,
        fill=False, edgecolor="black", linewidth=1.5, label="boundary",
    ))
    if path is not None:
        wx, wy = zip(*path.waypoints)
        ax.plot(wx, wy, linestyle="--", color="gray", linewidth=0.8, label="waypoints")
    ax.plot(xs, ys, linestyle="-", linewidth=0.6, marker=".", markersize=2,
            color="tab:blue", label="patient")

    off_track = [r for r in trace if r.status is TraceStatus.OFF_TRACK]
    for r in off_track:
        ax.plot([r.x], [r.y], linestyle="none", marker="x", markersize=10,
                markeredgewidth=2, color="red", label="off track")

    ax.set_xlim(*_limits(0.0, bounds.width, xs))
    ax.set_ylim(*_limits(0.0, bounds.depth, ys))
    ax.set_xlabel("x (left → right)")
    ax.set_ylabel("y (rear → front)")
    ax.legend(loc="upper left", fontsize="small")
    return fig


def trajectory_svg(
    trace: Sequence[TraceRecord],
    bounds: TrackBounds,
    path: Optional[TrackPath] = None
) -> bytes:
    """Render trajectory_figure as an SVG document."""
    with matplotlib.rc_context(SVG_RC):
        return _svg_bytes(trajectory_figure(trace, bounds, path))


def surface_svg(points: Sequence[SurfacePoint], resolution: int) -> bytes:
    """
    Filled contour maps of steer_x and steer_y over the track.

    Args:
        points: Output of surface_grid (y outer, x inner)
        resolution: Points per axis

    Returns:
        SVG document
    """
    shape = (resolution, resolution)
    x = np.array([p.x for p in points]).reshape(shape)
    y = np.array([p.y for p in points]).reshape(shape)
    levels = np.linspace(OUTPUT_LO, OUTPUT_HI, 21)
    size = PLOT_SIZE_PT / POINTS_PER_INCH

    with matplotlib.rc_context(SVG_RC):
        fig = Figure(figsize=(2 * size, size), dpi=POINTS_PER_INCH, layout="constrained")
        for index, output in enumerate(("steer_x", "steer_y"), start=1):
            z = np.array([getattr(p, output) for p in points]).reshape(shape)
            ax = fig.add_subplot(1, 2, index, aspect="equal")
            contour = ax.contourf(x, y, z, levels=levels, cmap="coolwarm")
            fig.colorbar(contour, ax=ax, shrink=0.8)
            ax.set_title(output)
            ax.set_xlabel("x")
            ax.set_ylabel("y")
        return _svg_bytes(fig)
