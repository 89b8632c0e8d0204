"""Core data schemas for fuzzy inference."""
import math
import re
from enum import Enum
from typing import Dict, List, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

IDENTIFIER = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


class MembershipShape(str, Enum):
    """Supported piecewise-linear membership shapes."""
    RAMP_UP = "ramp_up"
    RAMP_DOWN = "ramp_down"
    TRIANGLE = "triangle"
    TRAPEZOID = "trapezoid"


SHAPE_ARITY = {
    MembershipShape.RAMP_UP: 2,
    MembershipShape.RAMP_DOWN: 2,
    MembershipShape.TRIANGLE: 3,
    MembershipShape.TRAPEZOID: 4,
}


class Universe(BaseModel):
    """Closed interval [lo, hi] a linguistic variable is defined over."""
    model_config = ConfigDict(frozen=True)

    lo: float
    hi: float

    @model_validator(mode="after")
    def validate_bounds(self) -> "Universe":
        """Ensure the interval is finite and non-empty."""
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise ValueError("Universe bounds must be finite")
        if self.hi <= self.lo:
            raise ValueError(f"Universe needs hi > lo, got [{self.lo}, {self.hi}]")
        return self

    @property
    def span(self) -> float:
        return self.hi - self.lo

    @property
    def midpoint(self) -> float:
        return (self.lo + self.hi) / 2.0

    def clamp(self, x: float) -> float:
        return min(max(x, self.lo), self.hi)

    def contains(self, x: float) -> bool:
        return self.lo <= x <= self.hi


class MembershipFunction(BaseModel):
    """
    Piecewise-linear membership curve.

    ramp_up(a, b) is 0 up to a and 1 from b; ramp_down(a, b) is 1 up to a and 0 from b;
    triangle(a, b, c) peaks at b; trapezoid(a, b, c, d) is 1 on [b, c]. Equal neighbouring
    breakpoints give a vertical edge.
    """
    model_config = ConfigDict(frozen=True)

    shape: MembershipShape
    points: Tuple[float, ...]

    @model_validator(mode="after")
    def validate_points(self) -> "MembershipFunction":
        """Check arity, finiteness and ordering of the breakpoints."""
        expected = SHAPE_ARITY[self.shape]
        if len(self.points) != expected:
            raise ValueError(
                f"{self.shape.value} needs {expected} breakpoints, got {len(self.points)}"
            )
        if not all(math.isfinite(p) for p in self.points):
            raise ValueError("Breakpoints must be finite")
        if any(b < a for a, b in zip(self.points, self.points[1:])):
            raise ValueError(f"Breakpoints must be nondecreasing: {self.points}")
        return self

    @classmethod
    def ramp_up(cls, a: float, b: float) -> "MembershipFunction":
        return cls(shape=MembershipShape.RAMP_UP, points=(a, b))

    @classmethod
    def ramp_down(cls, a: float, b: float) -> "MembershipFunction":
        return cls(shape=MembershipShape.RAMP_DOWN, points=(a, b))

    @classmethod
    def triangle(cls, a: float, b: float, c: float) -> "MembershipFunction":
        return cls(shape=MembershipShape.TRIANGLE, points=(a, b, c))

    @classmethod
    def trapezoid(cls, a: float, b: float, c: float, d: float) -> "MembershipFunction":
        return cls(shape=MembershipShape.TRAPEZOID, points=(a, b, c, d))


class LinguisticVariable(BaseModel):
    """Named quantity described by linguistic terms over a universe."""
    model_config = ConfigDict(frozen=True)

    name: str
    universe: Universe
    terms: Dict[str, MembershipFunction]

    @field_validator("name")
    @classmethod
    def validate_name(cls, v: str) -> str:
        """Variable names are identifiers."""
        if not IDENTIFIER.match(v):
            raise ValueError(f"Invalid variable name: {v!r}")
        return v

    @model_validator(mode="after")
    def validate_terms(self) -> "LinguisticVariable":
        """Ensure at least one term and every breakpoint inside the universe."""
        if not self.terms:
            raise ValueError(f"Variable {self.name} must have at least one term")
        for term, mf in self.terms.items():
            if not IDENTIFIER.match(term):
                raise ValueError(f"Invalid term name {term!r} on {self.name}")
            outside = [p for p in mf.points if not self.universe.contains(p)]
            if outside:
                raise ValueError(
                    f"Term {self.name}.{term} has breakpoints outside "
                    f"[{self.universe.lo}, {self.universe.hi}]: {outside}"
                )
        return self


class FuzzyClause(BaseModel):
    """One `variable is term` pair."""
    model_config = ConfigDict(frozen=True)

    variable: str
    term: str

    def __str__(self) -> str:
        return f"{self.variable} is {self.term}"


class FuzzyRule(BaseModel):
    """AND-joined antecedent clauses implying consequent clauses."""
    model_config = ConfigDict(frozen=True)

    antecedent: Tuple[FuzzyClause, ...]
    consequent: Tuple[FuzzyClause, ...]

    @field_validator("antecedent", "consequent")
    @classmethod
    def validate_clauses(cls, v: Tuple[FuzzyClause, ...]) -> Tuple[FuzzyClause, ...]:
        """Ensure clauses are present and no variable repeats within one side."""
        if not v:
            raise ValueError("Rule needs at least one clause on each side")
        names = [clause.variable for clause in v]
        repeated = sorted({n for n in names if names.count(n) > 1})
        if repeated:
            raise ValueError(f"Variable repeated within one side of a rule: {repeated}")
        return v

    def __str__(self) -> str:
        lhs = " and ".join(str(c) for c in self.antecedent)
        rhs = ", ".join(str(c) for c in self.consequent)
        return f"if {lhs} then {rhs}"


class RuleBase(BaseModel):
    """Ordered collection of fuzzy rules."""
    model_config = ConfigDict(frozen=True)

    rules: Tuple[FuzzyRule, ...]

    @field_validator("rules")
    @classmethod
    def validate_rules(cls, v: Tuple[FuzzyRule, ...]) -> Tuple[FuzzyRule, ...]:
        """Ensure rule base has at least one rule."""
        if not v:
            raise ValueError("Rule base must have at least one rule")
        return v

    def __len__(self) -> int:
        return len(self.rules)


class ValidationResult(BaseModel):
    """Outcome of validating a rule base against its variables."""
    passed: bool
    feedback: str
    failed_checks: List[str] = Field(default_factory=list)
