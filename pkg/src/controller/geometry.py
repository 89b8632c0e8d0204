"""Conversions between track positions, controller inputs and belt corrections."""
import math

from src.controller.schemas import (
    NEUTRAL,
    BoundaryDistances,
    CorrectionVector,
    PatientPosition,
    SteeringCommand,
    TrackBounds,
)
from src.core.errors import ConfigurationError

HALF_RANGE = 250.0


def _clamp(value: float, hi: float) -> float:
    return min(max(value, 0.0), hi)


def distances_from_position(pos: PatientPosition, bounds: TrackBounds) -> BoundaryDistances:
    """
    Distances from a position to the four boundaries.

    Args:
        pos: Patient position
        bounds: Track bounds

    Returns:
        BoundaryDistances, each clamped to [0, span] so off-track positions saturate
    """
    return BoundaryDistances(
        d_front=_clamp(bounds.depth - pos.y, bounds.depth),
        d_rear=_clamp(pos.y, bounds.depth),
        d_left=_clamp(pos.x, bounds.width),
        d_right=_clamp(bounds.width - pos.x, bounds.width),
    )


def command_to_correction(cmd: SteeringCommand, gain: float) -> CorrectionVector:
    """
    Scale a steering command's offset from neutral into a belt correction.

    cx = gain * (steer_x - 250) / 250, likewise for cy.

    Args:
        cmd: Steering command
        gain: Track units per tick at full deflection

    Returns:
        CorrectionVector with |cx|, |cy| <= gain

    Raises:
        ConfigurationError: If gain is not a positive number
    """
    if not (math.isfinite(gain) and gain > 0):
        raise ConfigurationError(f"Gain must be positive, got {gain}")
    return CorrectionVector(
        cx=gain * (cmd.steer_x - NEUTRAL) / HALF_RANGE,
        cy=gain * (cmd.steer_y - NEUTRAL) / HALF_RANGE,
    )
