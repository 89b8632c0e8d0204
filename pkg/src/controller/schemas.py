"""Treadmill geometry and steering schemas."""
from pydantic import BaseModel, ConfigDict, Field

OUTPUT_LO = 0.0
OUTPUT_HI = 500.0
NEUTRAL = 250.0


class TrackBounds(BaseModel):
    """Walkable field: x in [0, width] left to right, y in [0, depth] rear to front."""
    model_config = ConfigDict(frozen=True)

    width: float = Field(500.0, gt=0)
    depth: float = Field(500.0, gt=0)

    def contains(self, x: float, y: float) -> bool:
        return 0.0 <= x <= self.width and 0.0 <= y <= self.depth


class PatientPosition(BaseModel):
    """Patient location in track units; may lie outside the bounds."""
    model_config = ConfigDict(frozen=True)

    x: float
    y: float


class BoundaryDistances(BaseModel):
    """Distances from the patient to each boundary, clamped to the track span."""
    model_config = ConfigDict(frozen=True)

    d_front: float = Field(..., ge=0)
    d_rear: float = Field(..., ge=0)
    d_left: float = Field(..., ge=0)
    d_right: float = Field(..., ge=0)

    def as_inputs(self) -> dict:
        """Controller inputs keyed by variable name."""
        return {
            "front": self.d_front,
            "rear": self.d_rear,
            "left": self.d_left,
            "right": self.d_right,
        }


class SteeringCommand(BaseModel):
    """
    Defuzzified controller outputs on [0, 500]; 250 is neutral.

    steer_x below 250 pushes left, above pushes right; steer_y below 250 pushes rear,
    above pushes front.
    """
    model_config = ConfigDict(frozen=True)

    steer_x: float = Field(NEUTRAL, ge=OUTPUT_LO, le=OUTPUT_HI)
    steer_y: float = Field(NEUTRAL, ge=OUTPUT_LO, le=OUTPUT_HI)


class CorrectionVector(BaseModel):
    """Belt displacement applied to the patient per tick, in track units."""
    model_config = ConfigDict(frozen=True)

    cx: float = 0.0
    cy: float = 0.0


NEUTRAL_COMMAND = SteeringCommand(steer_x=NEUTRAL, steer_y=NEUTRAL)
ZERO_CORRECTION = CorrectionVector(cx=0.0, cy=0.0)
