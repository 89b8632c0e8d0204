"""Simulation schemas."""
import math
from enum import Enum
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.controller.schemas import PatientPosition, TrackBounds

DEFAULT_STEPS = 1000
DEFAULT_SPEED = 4.0
DEFAULT_GAIN = 6.0
MAX_SEED = (1 << 64) - 1

Point = Tuple[float, float]


class TrackKind(str, Enum):
    """Built-in dummy tracks."""
    DRIFT_OUT = "drift_out"
    LAP = "lap"
    ZIGZAG = "zigzag"


class TrackPath(BaseModel):
    """Ordered waypoints the patient walks toward."""
    model_config = ConfigDict(frozen=True)

    waypoints: Tuple[Point, ...]

    @field_validator("waypoints")
    @classmethod
    def validate_waypoints(cls, v: Tuple[Point, ...]) -> Tuple[Point, ...]:
        """Ensure at least two finite waypoints with no immediate repeats."""
        if len(v) < 2:
            raise ValueError(f"Track needs at least 2 waypoints, got {len(v)}")
        if not all(math.isfinite(c) for point in v for c in point):
            raise ValueError("Waypoints must be finite")
        for index, (a, b) in enumerate(zip(v, v[1:]), start=1):
            if a == b:
                raise ValueError(f"Waypoints {index} and {index + 1} coincide at {a}")
        return v

    def __len__(self) -> int:
        return len(self.waypoints)


class SimulationConfig(BaseModel):
    """Parameters of one closed-loop run."""
    model_config = ConfigDict(frozen=True)

    bounds: TrackBounds = Field(default_factory=TrackBounds)
    path: TrackPath
    steps: int = Field(DEFAULT_STEPS, ge=1)
    speed: float = Field(DEFAULT_SPEED, gt=0, allow_inf_nan=False)
    noise_sigma: float = Field(0.0, ge=0, allow_inf_nan=False)
    seed: int = Field(0, ge=0, le=MAX_SEED)
    controller_enabled: bool = True
    gain: float = Field(DEFAULT_GAIN, gt=0, allow_inf_nan=False)
    control_period: int = Field(1, ge=1, description="Ticks between controller evaluations")


class PatientState(BaseModel):
    """Where the patient is and which waypoint they are heading to."""
    model_config = ConfigDict(frozen=True)

    position: PatientPosition
    waypoint_index: int = Field(0, ge=0)


class IntentVelocity(BaseModel):
    """The patient's own displacement for one tick, and the waypoint it aims at."""
    model_config = ConfigDict(frozen=True)

    vx: float
    vy: float
    waypoint_index: int = Field(..., ge=0)


class TraceStatus(str, Enum):
    OK = "OK"
    OFF_TRACK = "OFF_TRACK"


class TraceRecord(BaseModel):
    """One control-loop tick."""
    model_config = ConfigDict(frozen=True)

    step: int = Field(..., ge=0)
    x: float
    y: float
    d_front: float
    d_rear: float
    d_left: float
    d_right: float
    steer_x: float
    steer_y: float
    cx: float
    cy: float
    status: TraceStatus = TraceStatus.OK


class SimulationResult(str, Enum):
    COMPLETED = "completed"
    OFF_TRACK = "off_track"


class SimulationOutcome(BaseModel):
    """Result of a run plus its full trace."""
    result: SimulationResult
    off_track_step: Optional[int] = None
    trace: List[TraceRecord] = Field(default_factory=list)

    @model_validator(mode="after")
    def validate_result(self) -> "SimulationOutcome":
        """Off-track runs name the step of their final, off-track record."""
        if self.result is SimulationResult.OFF_TRACK:
            if not self.trace or self.trace[-1].status is not TraceStatus.OFF_TRACK:
                raise ValueError("Off-track outcome must end with an OFF_TRACK record")
            if self.off_track_step != self.trace[-1].step:
                raise ValueError("off_track_step must match the OFF_TRACK record")
        elif self.off_track_step is not None:
            raise ValueError("Completed outcome cannot carry an off_track_step")
        return self

    @property
    def completed(self) -> bool:
        return self.result is SimulationResult.COMPLETED

    @property
    def min_boundary_distance(self) -> float:
        """Closest approach to any boundary over the trace."""
        if not self.trace:
            return 0.0
        return min(min(r.d_front, r.d_rear, r.d_left, r.d_right) for r in self.trace)
