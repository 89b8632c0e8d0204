"""Closed-loop treadmill simulation."""
from src.simulation.rng import SplitMix64
from src.simulation.runner import intent_velocity, run_simulation, step
from src.simulation.schemas import (
    DEFAULT_GAIN,
    DEFAULT_SPEED,
    DEFAULT_STEPS,
    IntentVelocity,
    PatientState,
    SimulationConfig,
    SimulationOutcome,
    SimulationResult,
    TraceRecord,
    TraceStatus,
    TrackKind,
    TrackPath,
)
from src.simulation.tracks import generate_dummy_track, load_track_file

__all__ = [
    "SplitMix64",
    "intent_velocity",
    "run_simulation",
    "step",
    "DEFAULT_GAIN",
    "DEFAULT_SPEED",
    "DEFAULT_STEPS",
    "IntentVelocity",
    "PatientState",
    "SimulationConfig",
    "SimulationOutcome",
    "SimulationResult",
    "TraceRecord",
    "TraceStatus",
    "TrackKind",
    "TrackPath",
    "generate_dummy_track",
    "load_track_file",
]
