"""Membership evaluation and fuzzification."""
from typing import Dict, Optional, Union

import numpy as np

from src.core.schemas import LinguisticVariable, MembershipFunction, MembershipShape, Universe

ArrayLike = Union[float, np.ndarray]


def _rising(x: np.ndarray, a: float, b: float) -> np.ndarray:
    if b > a:
        return np.clip((x - a) / (b - a), 0.0, 1.0)
    return np.where(x >= a, 1.0, 0.0)


def _falling(x: np.ndarray, a: float, b: float) -> np.ndarray:
    if b > a:
        return np.clip((b - x) / (b - a), 0.0, 1.0)
    return np.where(x <= a, 1.0, 0.0)


def _grades(mf: MembershipFunction, x: np.ndarray) -> np.ndarray:
    p = mf.points
    if mf.shape is MembershipShape.RAMP_UP:
        return _rising(x, p[0], p[1])
    if mf.shape is MembershipShape.RAMP_DOWN:
        return _falling(x, p[0], p[1])
    if mf.shape is MembershipShape.TRIANGLE:
        return np.minimum(_rising(x, p[0], p[1]), _falling(x, p[1], p[2]))
    return np.minimum(_rising(x, p[0], p[1]), _falling(x, p[2], p[3]))


def membership_grade(
    mf: MembershipFunction,
    x: ArrayLike,
    universe: Optional[Universe] = None
) -> ArrayLike:
    """
    Evaluate a membership function.

    Args:
        mf: Membership function
        x: Crisp value or numpy array of values
        universe: If given, x is clamped to [lo, hi] first

    Returns:
        Grade(s) in [0, 1]; a float for scalar input, an array otherwise
    """
    values = np.asarray(x, dtype=float)
    if universe is not None:
        values = np.clip(values, universe.lo, universe.hi)
    grades = _grades(mf, values)
    if grades.ndim == 0:
        return float(grades)
    return grades


def fuzzify(var: LinguisticVariable, x: float) -> Dict[str, float]:
    """
    Map a crisp value to one grade per term of a variable.

    Args:
        var: Linguistic variable
        x: Crisp value, clamped to the variable's universe

    Returns:
        Mapping term name -> grade
    """
    clamped = var.universe.clamp(float(x))
    return {
        term: float(_grades(mf, np.asarray(clamped)))
        for term, mf in var.terms.items()
    }
