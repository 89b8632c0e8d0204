"""Unit tests for membership functions and fuzzification."""
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from pydantic import ValidationError

from src.core.membership import fuzzify, membership_grade
from src.core.schemas import LinguisticVariable, MembershipFunction, Universe


def test_ramp_up_values():
    """Test ramp_up is 0 below a, 1 above b, linear between."""
    mf = MembershipFunction.ramp_up(0, 500)

    assert membership_grade(mf, -10) == 0.0
    assert membership_grade(mf, 0) == 0.0
    assert membership_grade(mf, 125) == pytest.approx(0.25)
    assert membership_grade(mf, 500) == 1.0
    assert membership_grade(mf, 900) == 1.0


def test_ramp_down_values():
    """Test ramp_down mirrors ramp_up."""
    mf = MembershipFunction.ramp_down(0, 500)

    assert membership_grade(mf, 0) == 1.0
    assert membership_grade(mf, 125) == pytest.approx(0.75)
    assert membership_grade(mf, 500) == 0.0


def test_triangle_and_trapezoid():
    """Test interior shapes peak where expected."""
    tri = MembershipFunction.triangle(0, 50, 100)
    trap = MembershipFunction.trapezoid(0, 20, 80, 100)

    assert membership_grade(tri, 50) == 1.0
    assert membership_grade(tri, 25) == pytest.approx(0.5)
    assert membership_grade(tri, 100) == 0.0
    assert membership_grade(trap, 50) == 1.0
    assert membership_grade(trap, 90) == pytest.approx(0.5)


def test_degenerate_edge_is_a_step():
    """Test a == b gives a vertical edge instead of a division by zero."""
    up = MembershipFunction.ramp_up(10, 10)
    down = MembershipFunction.ramp_down(10, 10)

    assert membership_grade(up, 9.99) == 0.0
    assert membership_grade(up, 10) == 1.0
    assert membership_grade(down, 10) == 1.0
    assert membership_grade(down, 10.01) == 0.0


def test_universe_clamps_before_grading():
    """Test out-of-universe values take the boundary grade."""
    mf = MembershipFunction.triangle(0, 0, 500)
    universe = Universe(lo=0, hi=500)

    assert membership_grade(mf, -50, universe) == 1.0
    assert membership_grade(mf, 600, universe) == 0.0


def test_vectorised_grades():
    """Test arrays in, arrays out."""
    mf = MembershipFunction.ramp_up(0, 100)
    grades = membership_grade(mf, np.array([0.0, 50.0, 100.0]))

    assert isinstance(grades, np.ndarray)
    np.testing.assert_allclose(grades, [0.0, 0.5, 1.0])


def test_invalid_breakpoints_rejected():
    """Test decreasing breakpoints and wrong arity fail validation."""
    with pytest.raises(ValidationError):
        MembershipFunction.triangle(0, 60, 50)
    with pytest.raises(ValidationError):
        MembershipFunction(shape="ramp_up", points=(0.0, 1.0, 2.0))
    with pytest.raises(ValidationError):
        MembershipFunction.ramp_up(0, float("inf"))


def test_variable_terms_must_lie_in_universe():
    """Test a breakpoint outside the universe is rejected."""
    with pytest.raises(ValidationError):
        LinguisticVariable(
            name="front",
            universe=Universe(lo=0, hi=500),
            terms={"far": MembershipFunction.ramp_up(0, 600)},
        )


def test_variable_needs_a_term():
    """Test an empty term set is rejected."""
    with pytest.raises(ValidationError):
        LinguisticVariable(name="front", universe=Universe(lo=0, hi=500), terms={})


def test_fuzzify_clamps(distance_var):
    """Test fuzzify grades every term and clamps first."""
    assert fuzzify(distance_var, 100) == pytest.approx({"near": 0.8, "far": 0.2})
    assert fuzzify(distance_var, -20) == {"near": 1.0, "far": 0.0}
    assert fuzzify(distance_var, 10_000) == {"near": 0.0, "far": 1.0}


@given(
    points=st.lists(
        st.floats(min_value=-1e3, max_value=1e3, allow_nan=False), min_size=4, max_size=4
    ),
    x=st.floats(min_value=-1e4, max_value=1e4, allow_nan=False),
)
def test_grades_stay_in_unit_interval(points, x):
    """Test every shape grades into [0, 1]."""
    a, b, c, d = sorted(points)
    for mf in (
        MembershipFunction.ramp_up(a, b),
        MembershipFunction.ramp_down(a, b),
        MembershipFunction.triangle(a, b, c),
        MembershipFunction.trapezoid(a, b, c, d),
    ):
        grade = membership_grade(mf, x)
        assert 0.0 <= grade <= 1.0
