"""The assisted-treadmill controller: four boundary distances in, two steering outputs out."""
from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache
from pathlib import Path
from typing import List, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict

from src.controller.geometry import distances_from_position
from src.controller.schemas import (
    OUTPUT_HI,
    OUTPUT_LO,
    BoundaryDistances,
    PatientPosition,
    SteeringCommand,
    TrackBounds,
)
from src.core.engine import DEFAULT_RESOLUTION, MamdaniEngine
from src.core.errors import ConfigurationError
from src.core.schemas import LinguisticVariable, MembershipFunction, RuleBase, Universe
from src.rules.parser import RuleParser
from src.rules.symbols import SymbolTable
from src.utils.logging import setup_logger

logger = setup_logger(__name__)

DEFAULT_RULES_PATH = Path(__file__).parent / "default_rules.txt"

INPUT_NAMES = ("front", "rear", "left", "right")
INPUT_RANGE = (0.0, 500.0)
LATERAL_OUTPUT = "steer_x"
LONGITUDINAL_OUTPUT = "steer_y"
DEFAULT_OUTPUT_RAMP_SPAN = 100.0


class SurfacePoint(BaseModel):
    """One cell of the controller surface."""
    model_config = ConfigDict(frozen=True)

    x: float
    y: float
    steer_x: float
    steer_y: float


def treadmill_symbol_table() -> SymbolTable:
    """Symbols of the treadmill rules: near/far inputs and the four support directions."""
    return SymbolTable(
        input_vars={name: ("near", "far") for name in INPUT_NAMES},
        direction_map={
            "left": (LATERAL_OUTPUT, "left"),
            "right": (LATERAL_OUTPUT, "right"),
            "rear": (LONGITUDINAL_OUTPUT, "rear"),
            "front": (LONGITUDINAL_OUTPUT, "front"),
        },
        lateral_output=LATERAL_OUTPUT,
        longitudinal_output=LONGITUDINAL_OUTPUT,
    )


def load_default_rules_text() -> str:
    """Text of the embedded ten-rule file."""
    return DEFAULT_RULES_PATH.read_text(encoding="utf-8")


def _input_variable(name: str) -> LinguisticVariable:
    lo, hi = INPUT_RANGE
    return LinguisticVariable(
        name=name,
        universe=Universe(lo=lo, hi=hi),
        terms={
            "near": MembershipFunction.ramp_down(lo, hi),
            "far": MembershipFunction.ramp_up(lo, hi),
        },
    )


def _output_variable(name: str, low_term: str, high_term: str, span: float) -> LinguisticVariable:
    return LinguisticVariable(
        name=name,
        universe=Universe(lo=OUTPUT_LO, hi=OUTPUT_HI),
        terms={
            low_term: MembershipFunction.ramp_down(OUTPUT_LO, OUTPUT_LO + span),
            high_term: MembershipFunction.ramp_up(OUTPUT_HI - span, OUTPUT_HI),
        },
    )


def build_treadmill_controller(
    rule_base: Optional[RuleBase] = None,
    output_ramp_span: float = DEFAULT_OUTPUT_RAMP_SPAN,
    resolution: int = DEFAULT_RESOLUTION
) -> MamdaniEngine:
    """
    Assemble the treadmill controller around a rule base.

    Inputs front/rear/left/right on [0, 500] with complementary ramps near/far. Outputs
    steer_x (left, right) and steer_y (rear, front) on [0, 500]; each term is a ramp over the
    outer `output_ramp_span` units at its end of the universe.

    Args:
        rule_base: Rules to use; the embedded ten rules when omitted
        output_ramp_span: Width of the output ramps, in (0, 500]
        resolution: Centroid samples

    Returns:
        MamdaniEngine

    Raises:
        ConfigurationError: If the span is out of range or the rules do not fit the variables
    """
    if not 0.0 < output_ramp_span <= OUTPUT_HI - OUTPUT_LO:
        raise ConfigurationError(f"Output ramp span must be in (0, 500], got {output_ramp_span}")

    if rule_base is None:
        rule_base = RuleParser(treadmill_symbol_table()).parse_file(load_default_rules_text())

    return MamdaniEngine(
        inputs=[_input_variable(name) for name in INPUT_NAMES],
        outputs=[
            _output_variable(LATERAL_OUTPUT, "left", "right", output_ramp_span),
            _output_variable(LONGITUDINAL_OUTPUT, "rear", "front", output_ramp_span),
        ],
        rule_base=rule_base,
        defuzz_resolution=resolution,
    )


@lru_cache(maxsize=1)
def default_paper_controller() -> MamdaniEngine:
    """The controller with the embedded ten rules; built once and shared."""
    return build_treadmill_controller()


def steer(engine: MamdaniEngine, d: BoundaryDistances) -> SteeringCommand:
    """
    Steering command for a set of boundary distances.

    Args:
        engine: Engine with inputs front/rear/left/right and outputs steer_x/steer_y
        d: Boundary distances

    Returns:
        SteeringCommand

    Raises:
        ConfigurationError: If the engine does not have the treadmill shape
    """
    if set(engine.input_names()) != set(INPUT_NAMES) or set(engine.output_names()) != {
        LATERAL_OUTPUT, LONGITUDINAL_OUTPUT
    }:
        raise ConfigurationError(
            f"Engine shape mismatch: inputs {engine.input_names()}, outputs {engine.output_names()}"
        )
    outputs = engine.evaluate(d.as_inputs())
    return SteeringCommand(steer_x=outputs[LATERAL_OUTPUT], steer_y=outputs[LONGITUDINAL_OUTPUT])


def surface_grid(
    engine: MamdaniEngine,
    bounds: TrackBounds,
    resolution: int,
    max_workers: Optional[int] = None
) -> List[SurfacePoint]:
    """
    Steering over an evenly spaced grid of positions covering the track.

    Args:
        engine: Treadmill controller
        bounds: Track bounds
        resolution: Points per axis, at least 2
        max_workers: Rows evaluated on a thread pool of this size; serial when None or 1

    Returns:
        resolution**2 points, row-major with y outer and x inner

    Raises:
        ConfigurationError: If resolution < 2
    """
    if resolution < 2:
        raise ConfigurationError(f"Surface resolution must be >= 2, got {resolution}")

    xs = [float(x) for x in np.linspace(0.0, bounds.width, resolution)]
    ys = [float(y) for y in np.linspace(0.0, bounds.depth, resolution)]

    def row(y: float) -> List[SurfacePoint]:
        points = []
        for x in xs:
            cmd = steer(engine, distances_from_position(PatientPosition(x=x, y=y), bounds))
            points.append(SurfacePoint(x=x, y=y, steer_x=cmd.steer_x, steer_y=cmd.steer_y))
        return points

    if max_workers and max_workers > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            rows = list(pool.map(row, ys))
    else:
        rows = [row(y) for y in ys]

    logger.info(f"Surface computed: {resolution}x{resolution} points")
    return [point for points in rows for point in points]
