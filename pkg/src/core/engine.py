"""Mamdani inference: min-AND firing, max aggregation, centroid defuzzification."""
import math
from types import MappingProxyType
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from src.core.errors import ConfigurationError, InvalidInputError
from src.core.membership import fuzzify, membership_grade
from src.core.schemas import FuzzyRule, LinguisticVariable, RuleBase
from src.core.validators import RuleBaseValidator
from src.utils.logging import setup_logger

logger = setup_logger(__name__)

DEFAULT_RESOLUTION = 1001
MIN_RESOLUTION = 101
ZERO_MASS = 1e-9

Grades = Mapping[str, Mapping[str, float]]
Activations = Dict[str, Dict[str, float]]


def fire_rule(rule: FuzzyRule, grades: Grades) -> float:
    """
    Firing strength of a rule: the minimum of its antecedent grades.

    Args:
        rule: Rule to fire
        grades: Variable -> term -> grade

    Returns:
        Strength in [0, 1]

    Raises:
        ConfigurationError: If a clause does not resolve in grades
    """
    strength = 1.0
    for clause in rule.antecedent:
        try:
            grade = grades[clause.variable][clause.term]
        except KeyError:
            raise ConfigurationError(f"Unresolved clause in rule: {clause}") from None
        strength = min(strength, grade)
    return strength


def _centroid(
    samples: np.ndarray,
    curves: Sequence[Tuple[str, np.ndarray]],
    activations: Mapping[str, float],
    fallback: float
) -> float:
    mu = np.zeros_like(samples)
    for term, curve in curves:
        strength = activations.get(term, 0.0)
        if strength > 0.0:
            np.maximum(mu, np.minimum(curve, strength), out=mu)
    total = float(mu.sum())
    if total < ZERO_MASS:
        return fallback
    value = float(np.dot(samples, mu) / total)
    return min(max(value, float(samples[0])), float(samples[-1]))


def defuzzify_centroid(
    output_var: LinguisticVariable,
    activations: Mapping[str, float],
    resolution: int = DEFAULT_RESOLUTION,
    fallback: Optional[float] = None
) -> float:
    """
    Centroid of the clipped, max-aggregated output set.

    The universe is sampled at `resolution` evenly spaced points (both ends included) and
    the centroid is the plain weighted mean of the samples.

    Args:
        output_var: Output variable
        activations: Term -> activation strength
        resolution: Number of samples, at least 101
        fallback: Returned when the aggregate has no mass; defaults to the universe midpoint

    Returns:
        Crisp value within the output universe

    Raises:
        ConfigurationError: If resolution is too small
    """
    if resolution < MIN_RESOLUTION:
        raise ConfigurationError(f"Defuzzification resolution must be >= {MIN_RESOLUTION}, got {resolution}")
    universe = output_var.universe
    samples = np.linspace(universe.lo, universe.hi, resolution)
    curves = [(term, membership_grade(mf, samples)) for term, mf in output_var.terms.items()]
    return _centroid(
        samples,
        curves,
        activations,
        universe.midpoint if fallback is None else fallback
    )


class MamdaniEngine:
    """
    Immutable Mamdani controller: inputs, outputs and a validated rule base.

    Output term curves are sampled once at construction, so evaluate() only clips and
    aggregates. Instances hold no mutable state and may be shared between threads.
    """

    def __init__(
        self,
        inputs: Sequence[LinguisticVariable],
        outputs: Sequence[LinguisticVariable],
        rule_base: RuleBase,
        defuzz_resolution: int = DEFAULT_RESOLUTION,
        neutral_fallback: Optional[Mapping[str, float]] = None
    ):
        """
        Validate and assemble an engine.

        Args:
            inputs: Input variables
            outputs: Output variables
            rule_base: Rules over those variables
            defuzz_resolution: Samples used for centroid integration (>= 101)
            neutral_fallback: Output -> value used when no rule fires; defaults to midpoints

        Raises:
            ConfigurationError: If the variables or rules do not fit together
        """
        if defuzz_resolution < MIN_RESOLUTION:
            raise ConfigurationError(
                f"Defuzzification resolution must be >= {MIN_RESOLUTION}, got {defuzz_resolution}"
            )

        result = RuleBaseValidator.validate(inputs, outputs, rule_base)
        if not result.passed:
            raise ConfigurationError(result.feedback)

        fallback = {v.name: v.universe.midpoint for v in outputs}
        for name, value in (neutral_fallback or {}).items():
            if name not in fallback:
                raise ConfigurationError(f"Fallback given for unknown output: {name}")
            fallback[name] = float(value)

        self._inputs = tuple(inputs)
        self._outputs = tuple(outputs)
        self._rule_base = rule_base
        self._resolution = defuzz_resolution
        self._fallback = MappingProxyType(fallback)

        samples = {}
        curves = {}
        for var in self._outputs:
            xs = np.linspace(var.universe.lo, var.universe.hi, defuzz_resolution)
            xs.setflags(write=False)
            term_curves = []
            for term, mf in var.terms.items():
                curve = membership_grade(mf, xs)
                curve.setflags(write=False)
                term_curves.append((term, curve))
            samples[var.name] = xs
            curves[var.name] = tuple(term_curves)
        self._samples = MappingProxyType(samples)
        self._curves = MappingProxyType(curves)

        logger.info(
            f"Mamdani engine ready: {len(self._inputs)} inputs, "
            f"{len(self._outputs)} outputs, {len(rule_base)} rules"
        )

    @property
    def inputs(self) -> Tuple[LinguisticVariable, ...]:
        return self._inputs

    @property
    def outputs(self) -> Tuple[LinguisticVariable, ...]:
        return self._outputs

    @property
    def rule_base(self) -> RuleBase:
        return self._rule_base

    @property
    def defuzz_resolution(self) -> int:
        return self._resolution

    @property
    def neutral_fallback(self) -> Mapping[str, float]:
        return self._fallback

    def input_names(self) -> List[str]:
        return [v.name for v in self._inputs]

    def output_names(self) -> List[str]:
        return [v.name for v in self._outputs]

    def output(self, name: str) -> LinguisticVariable:
        for var in self._outputs:
            if var.name == name:
                return var
        raise ConfigurationError(f"Unknown output variable: {name}")

    def _fuzzify_inputs(self, crisp_inputs: Mapping[str, float]) -> Dict[str, Dict[str, float]]:
        grades = {}
        for var in self._inputs:
            if var.name not in crisp_inputs:
                raise InvalidInputError(f"Missing input variable: {var.name}")
            try:
                value = float(crisp_inputs[var.name])
            except (TypeError, ValueError):
                raise InvalidInputError(
                    f"Input {var.name} is not numeric: {crisp_inputs[var.name]!r}"
                ) from None
            if not math.isfinite(value):
                raise InvalidInputError(f"Input {var.name} is not finite: {value}")
            grades[var.name] = fuzzify(var, value)

        extra = set(crisp_inputs) - set(grades)
        if extra:
            logger.warning(f"Ignoring unknown inputs: {sorted(extra)}")
        return grades

    def rule_strengths(self, crisp_inputs: Mapping[str, float]) -> List[float]:
        """
        Firing strength of every rule, in rule base order.

        Args:
            crisp_inputs: Input variable -> crisp value

        Returns:
            One strength per rule
        """
        grades = self._fuzzify_inputs(crisp_inputs)
        return [fire_rule(rule, grades) for rule in self._rule_base.rules]

    def infer(self, crisp_inputs: Mapping[str, float]) -> Activations:
        """
        Aggregate rule conclusions into per-term activations.

        Args:
            crisp_inputs: Input variable -> crisp value

        Returns:
            Output variable -> term -> max firing strength of the rules concluding it

        Raises:
            InvalidInputError: If an input is missing or not a finite number
        """
        activations = {var.name: {term: 0.0 for term in var.terms} for var in self._outputs}
        for rule, strength in zip(self._rule_base.rules, self.rule_strengths(crisp_inputs)):
            for clause in rule.consequent:
                terms = activations[clause.variable]
                terms[clause.term] = max(terms[clause.term], strength)
        return activations

    def evaluate(self, crisp_inputs: Mapping[str, float]) -> Dict[str, float]:
        """
        Crisp outputs for crisp inputs.

        Args:
            crisp_inputs: Input variable -> crisp value

        Returns:
            Output variable -> defuzzified value
        """
        activations = self.infer(crisp_inputs)
        return {
            name: _centroid(
                self._samples[name],
                self._curves[name],
                activations[name],
                self._fallback[name]
            )
            for name in self._samples
        }


def infer(engine: MamdaniEngine, crisp_inputs: Mapping[str, float]) -> Activations:
    """Aggregated output activations; see MamdaniEngine.infer."""
    return engine.infer(crisp_inputs)


def evaluate(engine: MamdaniEngine, crisp_inputs: Mapping[str, float]) -> Dict[str, float]:
    """Crisp outputs; see MamdaniEngine.evaluate."""
    return engine.evaluate(crisp_inputs)


def rule_strengths(engine: MamdaniEngine, crisp_inputs: Mapping[str, float]) -> List[float]:
    """Per-rule firing strengths; see MamdaniEngine.rule_strengths."""
    return engine.rule_strengths(crisp_inputs)
