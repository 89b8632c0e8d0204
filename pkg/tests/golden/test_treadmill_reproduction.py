"""Golden tests: drift experiments, rule fidelity and controller surface properties."""
import numpy as np
import pytest

from src.controller.geometry import distances_from_position
from src.controller.schemas import PatientPosition, TrackBounds
from src.controller.treadmill import (
    default_paper_controller,
    load_default_rules_text,
    steer,
    surface_grid,
)
from src.core.membership import membership_grade
from src.rules.formatter import format_rule_file
from src.rules.parser import parse_rule_file
from src.simulation.runner import run_simulation
from src.simulation.schemas import SimulationConfig, SimulationResult, TraceStatus, TrackKind
from src.simulation.tracks import generate_dummy_track

RULE_BLOCK = """\
If front is far and rear is near then support is front.
If front is near and rear is far then support is rear.
If left is near and front is near then support is right and rear.
If left is near and rear is near then support is right and front.
If right is near and front is near then support is left and rear.
If right is near and rear is near then support is left and front.
If left is far and front is far then support is left and front.
If left is far and rear is far then support is left and rear.
If right is far and front is far then support is right and front.
If right is far and rear is far then support is right and rear.
"""

GRID = 51


def _normalise(text):
    return [line.strip().rstrip(".").lower() for line in text.splitlines() if line.strip()]


@pytest.fixture(scope="module")
def surface():
    """steer_x and steer_y on a 51x51 grid, indexed [iy, ix]."""
    points = surface_grid(default_paper_controller(), TrackBounds(), GRID)
    sx = np.array([p.steer_x for p in points]).reshape(GRID, GRID)
    sy = np.array([p.steer_y for p in points]).reshape(GRID, GRID)
    xs = np.array([p.x for p in points]).reshape(GRID, GRID)
    ys = np.array([p.y for p in points]).reshape(GRID, GRID)
    return xs, ys, sx, sy


def test_uncontrolled_drift_leaves_at_recurrence_step():
    """Golden test: without the controller the patient exits where x first exceeds 500."""
    x, expected_step = 250.0, 0
    while x <= 500.0:
        x += 4.0
        expected_step += 1

    config = SimulationConfig(
        path=generate_dummy_track(TrackKind.DRIFT_OUT),
        controller_enabled=False,
        noise_sigma=0.0,
        seed=0,
    )
    outcome = run_simulation(config)

    assert outcome.result is SimulationResult.OFF_TRACK
    assert outcome.off_track_step == expected_step


@pytest.mark.parametrize("kind", list(TrackKind))
def test_controller_keeps_patient_on_track(treadmill_engine, kind):
    """Golden test: with the controller at gain 6 every track completes 1000 steps on track."""
    config = SimulationConfig(
        path=generate_dummy_track(kind),
        controller_enabled=True,
        gain=6.0,
        seed=0,
    )
    outcome = run_simulation(config, treadmill_engine)

    assert outcome.result is SimulationResult.COMPLETED
    assert len(outcome.trace) == 1001
    assert all(r.status is TraceStatus.OK for r in outcome.trace)
    assert all(0 <= r.x <= 500 and 0 <= r.y <= 500 for r in outcome.trace)


def test_lap_settles_short_of_first_corner(treadmill_engine):
    """Golden test: the default lap run ends held near (419, 81), short of the (440, 60) corner."""
    config = SimulationConfig(path=generate_dummy_track(TrackKind.LAP), controller_enabled=True)

    last = run_simulation(config, treadmill_engine).trace[-1]

    assert last.x == pytest.approx(419.0, abs=5.0)
    assert last.y == pytest.approx(81.0, abs=5.0)


def test_shipped_rules_match_rule_block(treadmill_engine, symbols):
    """Golden test: the embedded rule file is the ten-rule block and is canonical."""
    text = load_default_rules_text()
    assert _normalise(text) == _normalise(RULE_BLOCK)

    rule_base = parse_rule_file(text, symbols)
    assert len(rule_base) == 10
    assert rule_base == treadmill_engine.rule_base
    canonical = format_rule_file(rule_base, symbols)
    assert format_rule_file(parse_rule_file(canonical, symbols), symbols) == canonical


def test_mirror_symmetry(surface):
    """Golden test: reflecting x negates steer_x about 250 and keeps steer_y, and vice versa."""
    _, _, sx, sy = surface

    np.testing.assert_allclose(sx[:, ::-1], 500.0 - sx, atol=1.0)
    np.testing.assert_allclose(sy[:, ::-1], sy, atol=1.0)
    np.testing.assert_allclose(sy[::-1, :], 500.0 - sy, atol=1.0)
    np.testing.assert_allclose(sx[::-1, :], sx, atol=1.0)


def test_midline_neutrality(surface):
    """Golden test: the vertical midline has neutral steer_x, the horizontal one neutral steer_y."""
    _, _, sx, sy = surface
    mid = GRID // 2

    np.testing.assert_allclose(sx[:, mid], 250.0, atol=1.0)
    np.testing.assert_allclose(sy[mid, :], 250.0, atol=1.0)


def test_centering_sign(surface):
    """Golden test: steering always points back toward the centre."""
    xs, ys, sx, sy = surface

    assert np.all((sx - 250.0) * (xs - 250.0) <= 0.0)
    assert np.all((sy - 250.0) * (ys - 250.0) <= 0.0)


def test_near_far_complementary(treadmill_engine):
    """Golden test: near + far = 1 across every input universe."""
    samples = np.linspace(0.0, 500.0, 10001)
    for var in treadmill_engine.inputs:
        total = membership_grade(var.terms["near"], samples) + membership_grade(var.terms["far"], samples)
        np.testing.assert_allclose(total, 1.0, rtol=0, atol=1e-12)


def test_rear_boundary_dominance(treadmill_engine):
    """Golden test: at the rear boundary steer_y is never below its value at mid-depth."""
    bounds = TrackBounds()
    for x in np.linspace(100.0, 400.0, 61):
        at_boundary = steer(treadmill_engine, distances_from_position(PatientPosition(x=x, y=0.0), bounds))
        at_middle = steer(treadmill_engine, distances_from_position(PatientPosition(x=x, y=250.0), bounds))

        assert at_boundary.steer_y >= at_middle.steer_y
