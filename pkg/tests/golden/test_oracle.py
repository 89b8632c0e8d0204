"""Golden test: the engine against a brute-force max-min evaluation of the treadmill rules."""
import numpy as np
import pytest

from src.controller.treadmill import default_paper_controller

SAMPLES = 1_000_000
VECTORS = 1000
TOLERANCE = 0.5

# (antecedent, consequent) with grades written out directly
RULES = [
    ((("front", "far"), ("rear", "near")), ("front",)),
    ((("front", "near"), ("rear", "far")), ("rear",)),
    ((("left", "near"), ("front", "near")), ("right", "rear")),
    ((("left", "near"), ("rear", "near")), ("right", "front")),
    ((("right", "near"), ("front", "near")), ("left", "rear")),
    ((("right", "near"), ("rear", "near")), ("left", "front")),
    ((("left", "far"), ("front", "far")), ("left", "front")),
    ((("left", "far"), ("rear", "far")), ("left", "rear")),
    ((("right", "far"), ("front", "far")), ("right", "front")),
    ((("right", "far"), ("rear", "far")), ("right", "rear")),
]

# direction -> (output, low or high end of the universe)
DIRECTIONS = {
    "left": ("steer_x", "low"),
    "right": ("steer_x", "high"),
    "rear": ("steer_y", "low"),
    "front": ("steer_y", "high"),
}


def _grade(term, d):
    return 1.0 - d / 500.0 if term == "near" else d / 500.0


class BruteForceOracle:
    """Pointwise max-min aggregation over a dense output grid."""

    def __init__(self, samples: int):
        xs = np.linspace(0.0, 500.0, samples)
        low = np.clip((100.0 - xs) / 100.0, 0.0, 1.0)
        high = np.clip((xs - 400.0) / 100.0, 0.0, 1.0)
        # outside both supports the aggregate is zero
        support = (low > 0) | (high > 0)
        self.xs = xs[support]
        self.low = low[support]
        self.high = high[support]

    def evaluate(self, inputs):
        strength = {("steer_x", "low"): 0.0, ("steer_x", "high"): 0.0,
                    ("steer_y", "low"): 0.0, ("steer_y", "high"): 0.0}
        for antecedent, consequent in RULES:
            fire = min(_grade(term, inputs[var]) for var, term in antecedent)
            for direction in consequent:
                key = DIRECTIONS[direction]
                strength[key] = max(strength[key], fire)

        result = {}
        for output in ("steer_x", "steer_y"):
            mu = np.maximum(
                np.minimum(self.low, strength[(output, "low")]),
                np.minimum(self.high, strength[(output, "high")]),
            )
            total = mu.sum()
            result[output] = 250.0 if total < 1e-9 else float(np.dot(self.xs, mu) / total)
        return result


@pytest.fixture(scope="module")
def oracle():
    return BruteForceOracle(SAMPLES)


def test_engine_matches_oracle(oracle):
    """Golden test: 1000 random distance vectors agree within half a unit."""
    engine = default_paper_controller()
    rng = np.random.default_rng(20240601)
    vectors = rng.uniform(0.0, 500.0, size=(VECTORS, 4))

    worst = 0.0
    for front, rear, left, right in vectors:
        inputs = {"front": front, "rear": rear, "left": left, "right": right}
        expected = oracle.evaluate(inputs)
        actual = engine.evaluate(inputs)
        for output in ("steer_x", "steer_y"):
            worst = max(worst, abs(actual[output] - expected[output]))

    assert worst <= TOLERANCE
