"""CLI argument and output models."""
from pathlib import Path
from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.simulation.schemas import (
    DEFAULT_GAIN,
    DEFAULT_SPEED,
    DEFAULT_STEPS,
    MAX_SEED,
    SimulationResult,
)

DEFAULT_SURFACE_RESOLUTION = 51


class SimulateArgs(BaseModel):
    """Arguments of `simulate`."""
    model_config = ConfigDict(frozen=True)

    track: str = Field(..., description="Built-in track kind, or @path to a waypoint CSV")
    steps: int = Field(DEFAULT_STEPS, ge=1)
    controller: Literal["on", "off"] = "on"
    seed: int = Field(0, ge=0, le=MAX_SEED)
    sigma: float = Field(0.0, ge=0, allow_inf_nan=False)
    gain: float = Field(DEFAULT_GAIN, gt=0, allow_inf_nan=False)
    speed: float = Field(DEFAULT_SPEED, gt=0, allow_inf_nan=False)
    out: Path
    svg: Optional[Path] = None
    rules: Optional[Path] = None
    control_period: int = Field(1, ge=1)


class SurfaceArgs(BaseModel):
    """Arguments of `surface`."""
    model_config = ConfigDict(frozen=True)

    resolution: int = Field(DEFAULT_SURFACE_RESOLUTION, ge=2)
    out: Path
    svg: Optional[Path] = None
    rules: Optional[Path] = None


class EvalArgs(BaseModel):
    """Arguments of `eval`: a position, or the four boundary distances."""
    model_config = ConfigDict(frozen=True)

    x: Optional[float] = Field(None, allow_inf_nan=False)
    y: Optional[float] = Field(None, allow_inf_nan=False)
    front: Optional[float] = Field(None, ge=0, allow_inf_nan=False)
    rear: Optional[float] = Field(None, ge=0, allow_inf_nan=False)
    left: Optional[float] = Field(None, ge=0, allow_inf_nan=False)
    right: Optional[float] = Field(None, ge=0, allow_inf_nan=False)
    gain: float = Field(DEFAULT_GAIN, gt=0, allow_inf_nan=False)
    rules: Optional[Path] = None
    explain: bool = False

    @model_validator(mode="after")
    def validate_inputs(self) -> "EvalArgs":
        """Exactly one of the two input forms, given completely."""
        position = [self.x, self.y]
        distances = [self.front, self.rear, self.left, self.right]
        has_position = any(v is not None for v in position)
        has_distances = any(v is not None for v in distances)
        if has_position and has_distances:
            raise ValueError("Give either --x/--y or the four distances, not both")
        if has_position and None in position:
            raise ValueError("--x and --y must be given together")
        if has_distances and None in distances:
            raise ValueError("--front, --rear, --left and --right must all be given")
        if not (has_position or has_distances):
            raise ValueError("Give --x/--y or --front/--rear/--left/--right")
        return self

    @property
    def uses_position(self) -> bool:
        return self.x is not None


class ParseArgs(BaseModel):
    """Arguments of `parse`."""
    model_config = ConfigDict(frozen=True)

    rules: Path
    canonical: Optional[Path] = None


class SimulationSummary(BaseModel):
    """The one-line JSON outcome printed by `simulate`."""
    result: SimulationResult
    off_track_step: Optional[int] = None
    steps: int
    seed: int
    min_boundary_distance: float


class EvalResponse(BaseModel):
    """The JSON object printed by `eval`."""
    steer_x: float
    steer_y: float
    cx: float
    cy: float
    rule_strengths: Optional[List[float]] = Field(None, description="Per-rule firing strength, with --explain")
