"""Command-line entry point: simulate, surface, eval, parse.

Exit codes: 0 success (or a completed run), 1 any error, 2 a run that left the track.
"""
import argparse
import sys
from pathlib import Path
from typing import Callable, Dict, List, NoReturn, Optional

from pydantic import ValidationError

from cli.dependencies import get_engine, get_track
from cli.emitters import json_line, write_atomic, write_surface_csv, write_trace_csv
from cli.models import (
    DEFAULT_SURFACE_RESOLUTION,
    EvalArgs,
    EvalResponse,
    ParseArgs,
    SimulateArgs,
    SimulationSummary,
    SurfaceArgs,
)
from cli.plots import surface_svg, trajectory_svg
from src.controller.geometry import command_to_correction, distances_from_position
from src.controller.schemas import BoundaryDistances, PatientPosition, TrackBounds
from src.controller.treadmill import treadmill_symbol_table, steer, surface_grid
from src.rules.errors import RuleError
from src.rules.formatter import format_rule_file
from src.rules.parser import RuleParser
from src.simulation.runner import run_simulation
from src.simulation.schemas import (
    DEFAULT_GAIN,
    DEFAULT_SPEED,
    DEFAULT_STEPS,
    SimulationConfig,
)
from src.utils.logging import setup_logger

logger = setup_logger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_OFF_TRACK = 2


class HarnessArgumentParser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors exit with status 1."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _fields(args: argparse.Namespace, *names: str) -> Dict[str, object]:
    return {name: getattr(args, name) for name in names if getattr(args, name) is not None}


def cmd_simulate(args: argparse.Namespace) -> int:
    """Run one closed-loop simulation and write its trace."""
    opts = SimulateArgs(**_fields(
        args, "track", "steps", "controller", "seed", "sigma", "gain", "speed",
        "out", "svg", "rules", "control_period",
    ))
    bounds = TrackBounds()
    controller_enabled = opts.controller == "on"
    config = SimulationConfig(
        bounds=bounds,
        path=get_track(opts.track, bounds, opts.seed),
        steps=opts.steps,
        speed=opts.speed,
        noise_sigma=opts.sigma,
        seed=opts.seed,
        controller_enabled=controller_enabled,
        gain=opts.gain,
        control_period=opts.control_period,
    )
    engine = get_engine(opts.rules) if controller_enabled else None

    outcome = run_simulation(config, engine)
    write_trace_csv(opts.out, outcome.trace)
    if opts.svg is not None:
        write_atomic(opts.svg, trajectory_svg(outcome.trace, bounds, config.path))

    summary = SimulationSummary(
        result=outcome.result,
        off_track_step=outcome.off_track_step,
        steps=opts.steps,
        seed=opts.seed,
        min_boundary_distance=round(outcome.min_boundary_distance, 6),
    )
    print(json_line(summary))
    return EXIT_OK if outcome.completed else EXIT_OFF_TRACK


def cmd_surface(args: argparse.Namespace) -> int:
    """Tabulate the controller over a grid of positions."""
    opts = SurfaceArgs(**_fields(args, "resolution", "out", "svg", "rules"))
    engine = get_engine(opts.rules)
    points = surface_grid(engine, TrackBounds(), opts.resolution)
    write_surface_csv(opts.out, points)
    if opts.svg is not None:
        write_atomic(opts.svg, surface_svg(points, opts.resolution))
    return EXIT_OK


def cmd_eval(args: argparse.Namespace) -> int:
    """Evaluate the controller once and print the command and correction."""
    opts = EvalArgs(**_fields(
        args, "x", "y", "front", "rear", "left", "right", "gain", "rules", "explain",
    ))
    engine = get_engine(opts.rules)
    if opts.uses_position:
        distances = distances_from_position(PatientPosition(x=opts.x, y=opts.y), TrackBounds())
    else:
        distances = BoundaryDistances(
            d_front=opts.front, d_rear=opts.rear, d_left=opts.left, d_right=opts.right
        )

    if opts.explain:
        strengths = engine.rule_strengths(distances.as_inputs())
        if max(strengths) == 0.0:
            logger.warning("No rule fires for these inputs; outputs fall back to neutral")
    else:
        strengths = None

    command = steer(engine, distances)
    correction = command_to_correction(command, opts.gain)
    response = EvalResponse(
        steer_x=command.steer_x,
        steer_y=command.steer_y,
        cx=correction.cx,
        cy=correction.cy,
        rule_strengths=strengths,
    )
    print(json_line(response))
    return EXIT_OK


def cmd_parse(args: argparse.Namespace) -> int:
    """Check a rule file; optionally write its canonical form."""
    opts = ParseArgs(**_fields(args, "rules", "canonical"))
    symbols = treadmill_symbol_table()
    rule_base = RuleParser(symbols).parse_file(opts.rules.read_text(encoding="utf-8"))
    if opts.canonical is not None:
        write_atomic(opts.canonical, format_rule_file(rule_base, symbols))
    print(f"{len(rule_base)} rules OK")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    """Argument parser with one subparser per command."""
    parser = HarnessArgumentParser(
        prog="fuzzy-harness",
        description="Fuzzy assisted-treadmill controller: simulation, surfaces and rule checks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sim = sub.add_parser("simulate", help="Run a closed-loop simulation")
    sim.add_argument("--track", required=True, help="drift_out, lap, zigzag or @waypoints.csv")
    sim.add_argument("--steps", type=int, default=DEFAULT_STEPS)
    sim.add_argument("--controller", choices=("on", "off"), default="on")
    sim.add_argument("--seed", type=int, default=0)
    sim.add_argument("--sigma", type=float, default=0.0, help="Per-axis noise standard deviation")
    sim.add_argument("--gain", type=float, default=DEFAULT_GAIN)
    sim.add_argument("--speed", type=float, default=DEFAULT_SPEED)
    sim.add_argument("--control-period", type=int, default=1, help="Ticks between controller updates")
    sim.add_argument("--out", type=Path, required=True, help="Trace CSV")
    sim.add_argument("--svg", type=Path, help="Trajectory plot")
    sim.add_argument("--rules", type=Path, help="Rule file (default: embedded rules)")
    sim.set_defaults(handler=cmd_simulate)

    surf = sub.add_parser("surface", help="Tabulate steering over the track")
    surf.add_argument("--resolution", type=int, default=DEFAULT_SURFACE_RESOLUTION)
    surf.add_argument("--out", type=Path, required=True, help="Surface CSV")
    surf.add_argument("--svg", type=Path, help="Contour plot")
    surf.add_argument("--rules", type=Path)
    surf.set_defaults(handler=cmd_surface)

    ev = sub.add_parser("eval", help="Evaluate the controller once")
    for name in ("x", "y", "front", "rear", "left", "right"):
        ev.add_argument(f"--{name}", type=float)
    ev.add_argument("--gain", type=float, default=DEFAULT_GAIN)
    ev.add_argument("--rules", type=Path)
    ev.add_argument("--explain", action="store_true", help="Include per-rule firing strengths")
    ev.set_defaults(handler=cmd_eval)

    chk = sub.add_parser("parse", help="Check a rule file")
    chk.add_argument("--rules", type=Path, required=True)
    chk.add_argument("--canonical", type=Path, help="Write the canonical form here")
    chk.set_defaults(handler=cmd_parse)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    Run the CLI.

    Args:
        argv: Arguments without the program name; sys.argv[1:] when None

    Returns:
        Exit status
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_ERROR

    handler: Callable[[argparse.Namespace], int] = args.handler
    try:
        return handler(args)
    except RuleError as e:
        print(str(e), file=sys.stderr)
        return EXIT_ERROR
    except ValidationError as e:
        for error in e.errors():
            location = ".".join(str(part) for part in error["loc"]) or "arguments"
            print(f"error: {location}: {error['msg']}", file=sys.stderr)
        return EXIT_ERROR
    except (ValueError, OSError) as e:
        logger.error(f"{args.command} failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
