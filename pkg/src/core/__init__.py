"""Mamdani fuzzy inference core."""
from src.core.engine import (
    DEFAULT_RESOLUTION,
    MamdaniEngine,
    defuzzify_centroid,
    evaluate,
    fire_rule,
    infer,
    rule_strengths,
)
from src.core.errors import ConfigurationError, InvalidInputError
from src.core.membership import fuzzify, membership_grade
from src.core.schemas import (
    FuzzyClause,
    FuzzyRule,
    LinguisticVariable,
    MembershipFunction,
    MembershipShape,
    RuleBase,
    Universe,
    ValidationResult,
)

__all__ = [
    "DEFAULT_RESOLUTION",
    "MamdaniEngine",
    "defuzzify_centroid",
    "evaluate",
    "fire_rule",
    "infer",
    "rule_strengths",
    "ConfigurationError",
    "InvalidInputError",
    "fuzzify",
    "membership_grade",
    "FuzzyClause",
    "FuzzyRule",
    "LinguisticVariable",
    "MembershipFunction",
    "MembershipShape",
    "RuleBase",
    "Universe",
    "ValidationResult",
]
