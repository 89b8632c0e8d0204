"""Assisted omni-directional treadmill controller."""
from src.controller.geometry import command_to_correction, distances_from_position
from src.controller.schemas import (
    NEUTRAL,
    NEUTRAL_COMMAND,
    ZERO_CORRECTION,
    BoundaryDistances,
    CorrectionVector,
    PatientPosition,
    SteeringCommand,
    TrackBounds,
)
from src.controller.treadmill import (
    SurfacePoint,
    build_treadmill_controller,
    default_paper_controller,
    load_default_rules_text,
    treadmill_symbol_table,
    steer,
    surface_grid,
)

__all__ = [
    "command_to_correction",
    "distances_from_position",
    "NEUTRAL",
    "NEUTRAL_COMMAND",
    "ZERO_CORRECTION",
    "BoundaryDistances",
    "CorrectionVector",
    "PatientPosition",
    "SteeringCommand",
    "TrackBounds",
    "SurfacePoint",
    "build_treadmill_controller",
    "default_paper_controller",
    "load_default_rules_text",
    "treadmill_symbol_table",
    "steer",
    "surface_grid",
]
