"""Closed-loop simulation of a patient walking a track under (optional) fuzzy assistance."""
import math
from typing import Optional

from src.controller.geometry import command_to_correction, distances_from_position
from src.controller.schemas import (
    NEUTRAL_COMMAND,
    ZERO_CORRECTION,
    BoundaryDistances,
    CorrectionVector,
    PatientPosition,
    SteeringCommand,
)
from src.controller.treadmill import default_paper_controller, steer
from src.core.engine import MamdaniEngine
from src.simulation.rng import SplitMix64
from src.simulation.schemas import (
    IntentVelocity,
    PatientState,
    SimulationConfig,
    SimulationOutcome,
    SimulationResult,
    TraceRecord,
    TraceStatus,
    TrackPath,
)
from src.utils.logging import setup_logger

logger = setup_logger(__name__)


def _current_waypoint(state: PatientState, path: TrackPath, speed: float) -> int:
    """Index of the waypoint to head for, passing any already within reach."""
    index = min(state.waypoint_index, len(path) - 1)
    last = len(path) - 1
    while index < last:
        wx, wy = path.waypoints[index]
        if math.hypot(wx - state.position.x, wy - state.position.y) > speed:
            break
        index += 1
    return index


def intent_velocity(
    state: PatientState,
    path: TrackPath,
    speed: float,
    noise_sigma: float,
    rng: SplitMix64
) -> IntentVelocity:
    """
    The patient's own motion for one tick.

    Heads for the current waypoint at `speed`, advancing past waypoints within `speed`.
    Once within `speed` of the final waypoint only noise remains. Noise is Gaussian per
    axis (x first), drawn only when noise_sigma > 0.

    Args:
        state: Patient state
        path: Track
        speed: Track units per tick
        noise_sigma: Standard deviation of the per-axis noise
        rng: Seeded generator

    Returns:
        IntentVelocity with the waypoint index in effect
    """
    index = _current_waypoint(state, path, speed)

    nx = ny = 0.0
    if noise_sigma > 0:
        nx = rng.gauss(0.0, noise_sigma)
        ny = rng.gauss(0.0, noise_sigma)

    wx, wy = path.waypoints[index]
    dx = wx - state.position.x
    dy = wy - state.position.y
    distance = math.hypot(dx, dy)

    if index == len(path) - 1 and distance <= speed:
        return IntentVelocity(vx=nx, vy=ny, waypoint_index=index)

    return IntentVelocity(
        vx=speed * dx / distance + nx,
        vy=speed * dy / distance + ny,
        waypoint_index=index,
    )


def step(state: PatientState, intent: IntentVelocity, correction: CorrectionVector) -> PatientState:
    """
    Advance the patient one tick: position + intent + correction.

    Args:
        state: Current state
        intent: The patient's own motion (carries the waypoint bookkeeping)
        correction: Belt correction

    Returns:
        New PatientState
    """
    return PatientState(
        position=PatientPosition(
            x=state.position.x + intent.vx + correction.cx,
            y=state.position.y + intent.vy + correction.cy,
        ),
        waypoint_index=intent.waypoint_index,
    )


def _record(
    tick: int,
    state: PatientState,
    distances: BoundaryDistances,
    command: SteeringCommand,
    correction: CorrectionVector,
    status: TraceStatus
) -> TraceRecord:
    return TraceRecord(
        step=tick,
        x=state.position.x,
        y=state.position.y,
        d_front=distances.d_front,
        d_rear=distances.d_rear,
        d_left=distances.d_left,
        d_right=distances.d_right,
        steer_x=command.steer_x,
        steer_y=command.steer_y,
        cx=correction.cx,
        cy=correction.cy,
        status=status,
    )


def run_simulation(config: SimulationConfig, engine: Optional[MamdaniEngine] = None) -> SimulationOutcome:
    """
    Run the control loop until the patient leaves the track or `steps` ticks have passed.

    Each tick: distances, steering and correction (neutral/zero with the controller off,
    refreshed every `control_period` ticks otherwise), trace record, intent, step. A
    position outside the bounds is recorded as OFF_TRACK and ends the run.

    Args:
        config: Run parameters
        engine: Controller; the default controller when omitted

    Returns:
        SimulationOutcome with steps + 1 records when completed
    """
    bounds = config.bounds
    path = config.path
    if config.controller_enabled and engine is None:
        engine = default_paper_controller()

    logger.info(
        f"Simulation start: {len(path)} waypoints, {config.steps} steps, "
        f"controller {'on' if config.controller_enabled else 'off'}, seed {config.seed}"
    )

    rng = SplitMix64(config.seed)
    x0, y0 = path.waypoints[0]
    state = PatientState(position=PatientPosition(x=x0, y=y0), waypoint_index=0)
    command, correction = NEUTRAL_COMMAND, ZERO_CORRECTION
    trace = []
    tick = 0

    while True:
        distances = distances_from_position(state.position, bounds)
        if config.controller_enabled and tick % config.control_period == 0:
            command = steer(engine, distances)
            correction = command_to_correction(command, config.gain)

        on_track = bounds.contains(state.position.x, state.position.y)
        status = TraceStatus.OK if on_track else TraceStatus.OFF_TRACK
        trace.append(_record(tick, state, distances, command, correction, status))
        logger.debug(
            f"tick {tick} pos=({state.position.x:.3f}, {state.position.y:.3f}) "
            f"steer=({command.steer_x:.3f}, {command.steer_y:.3f}) corr=({correction.cx:.3f}, {correction.cy:.3f})"
        )

        if not on_track:
            logger.warning(
                f"Patient left the track at step {tick} "
                f"({state.position.x:.3f}, {state.position.y:.3f})"
            )
            return SimulationOutcome(
                result=SimulationResult.OFF_TRACK,
                off_track_step=tick,
                trace=trace,
            )
        if tick == config.steps:
            break

        intent = intent_velocity(state, path, config.speed, config.noise_sigma, rng)
        state = step(state, intent, correction)
        tick += 1

    logger.info(f"Simulation completed: {config.steps} steps on track")
    return SimulationOutcome(result=SimulationResult.COMPLETED, trace=trace)
