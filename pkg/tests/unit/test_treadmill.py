"""Unit tests for the treadmill controller and its geometry."""
import pytest
from pydantic import ValidationError

from src.controller.geometry import command_to_correction, distances_from_position
from src.controller.schemas import (
    BoundaryDistances,
    PatientPosition,
    SteeringCommand,
    TrackBounds,
)
from src.controller.treadmill import (
    build_treadmill_controller,
    default_paper_controller,
    steer,
    surface_grid,
)
from src.core.errors import ConfigurationError
from src.rules.parser import parse_rule_file


def test_distances_at_centre():
    """Test the centre is 250 from every boundary."""
    d = distances_from_position(PatientPosition(x=250, y=250), TrackBounds())

    assert d == BoundaryDistances(d_front=250, d_rear=250, d_left=250, d_right=250)


def test_distances_near_corner():
    """Test distances follow x left-to-right and y rear-to-front."""
    d = distances_from_position(PatientPosition(x=10, y=480), TrackBounds())

    assert (d.d_left, d.d_right, d.d_rear, d.d_front) == (10, 490, 480, 20)


def test_distances_clamp_off_track():
    """Test positions past a boundary saturate at 0 and the span."""
    d = distances_from_position(PatientPosition(x=510, y=-3), TrackBounds())

    assert d.d_right == 0.0
    assert d.d_left == 500.0
    assert d.d_rear == 0.0
    assert d.d_front == 500.0


def test_command_to_correction():
    """Test the correction scales the offset from neutral by gain."""
    c = command_to_correction(SteeringCommand(steer_x=375, steer_y=125), gain=6)

    assert c.cx == pytest.approx(3.0)
    assert c.cy == pytest.approx(-3.0)
    neutral = command_to_correction(SteeringCommand(), gain=6)
    assert (neutral.cx, neutral.cy) == (0.0, 0.0)


@pytest.mark.parametrize("gain", [0.0, -1.0, float("nan")])
def test_command_to_correction_bad_gain(gain):
    """Test non-positive gain is a configuration error."""
    with pytest.raises(ConfigurationError):
        command_to_correction(SteeringCommand(), gain)


def test_steering_command_range():
    """Test steering outside [0, 500] is rejected."""
    with pytest.raises(ValidationError):
        SteeringCommand(steer_x=501)


def test_default_controller_shape(treadmill_engine):
    """Test the default controller has four inputs, two outputs, ten rules."""
    assert treadmill_engine.input_names() == ["front", "rear", "left", "right"]
    assert treadmill_engine.output_names() == ["steer_x", "steer_y"]
    assert len(treadmill_engine.rule_base) == 10
    assert default_paper_controller() is treadmill_engine


def test_steer_centre_is_neutral(treadmill_engine):
    """Test the centre of the track needs no correction."""
    cmd = steer(treadmill_engine, BoundaryDistances(d_front=250, d_rear=250, d_left=250, d_right=250))

    assert cmd.steer_x == pytest.approx(250, abs=1e-6)
    assert cmd.steer_y == pytest.approx(250, abs=1e-6)


def test_steer_pushes_away_from_right_boundary(treadmill_engine):
    """Test a patient near the right edge is steered left."""
    cmd = steer(treadmill_engine, distances_from_position(PatientPosition(x=490, y=250), TrackBounds()))

    assert cmd.steer_x < 200
    assert cmd.steer_y == pytest.approx(250, abs=1e-6)


def test_steer_rear_boundary_strongly_forward(treadmill_engine):
    """Test a patient at the rear boundary is pushed firmly to the front."""
    cmd = steer(treadmill_engine, BoundaryDistances(d_front=500, d_rear=0, d_left=250, d_right=250))

    assert cmd.steer_y > 300
    assert cmd.steer_x == pytest.approx(250, abs=1e-6)


def test_steer_right_rear_quadrant(treadmill_engine):
    """Test a patient toward the right-rear corner is pushed left and to the front."""
    cmd = steer(treadmill_engine, BoundaryDistances(d_front=400, d_rear=100, d_left=400, d_right=100))

    assert cmd.steer_x < 250 < cmd.steer_y


def test_steer_rejects_other_engines(tiny_engine):
    """Test steer needs the treadmill variable layout."""
    with pytest.raises(ConfigurationError):
        steer(tiny_engine, BoundaryDistances(d_front=1, d_rear=1, d_left=1, d_right=1))


def test_build_controller_with_custom_rules(symbols, fixtures_dir):
    """Test a one-rule controller only ever pushes front."""
    rules = parse_rule_file((fixtures_dir / "rules" / "single_rule.txt").read_text(), symbols)
    engine = build_treadmill_controller(rules)

    cmd = steer(engine, BoundaryDistances(d_front=450, d_rear=50, d_left=250, d_right=250))

    assert len(engine.rule_base) == 1
    assert cmd.steer_y > 250
    assert cmd.steer_x == 250.0


@pytest.mark.parametrize("span", [0.0, -10.0, 501.0])
def test_build_controller_bad_span(span):
    """Test the output ramp span must fit the universe."""
    with pytest.raises(ConfigurationError):
        build_treadmill_controller(output_ramp_span=span)


def test_full_span_outputs_are_weaker(treadmill_engine):
    """Test widening the output ramps shrinks the correction at a boundary."""
    wide = build_treadmill_controller(output_ramp_span=500.0)
    d = BoundaryDistances(d_front=500, d_rear=0, d_left=250, d_right=250)

    assert 250 < steer(wide, d).steer_y < steer(treadmill_engine, d).steer_y


def test_surface_grid_order(treadmill_engine):
    """Test rows run y outer, x inner and threads preserve order."""
    serial = surface_grid(treadmill_engine, TrackBounds(), 5)
    threaded = surface_grid(treadmill_engine, TrackBounds(), 5, max_workers=3)

    assert len(serial) == 25
    assert [(p.x, p.y) for p in serial[:6]] == [
        (0.0, 0.0), (125.0, 0.0), (250.0, 0.0), (375.0, 0.0), (500.0, 0.0), (0.0, 125.0)
    ]
    assert threaded == serial


def test_surface_grid_resolution():
    """Test a grid needs at least two points per axis."""
    with pytest.raises(ConfigurationError):
        surface_grid(default_paper_controller(), TrackBounds(), 1)
