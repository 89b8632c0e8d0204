"""Symbols the rule language resolves identifiers against."""
from enum import Enum
from typing import Dict, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.core.schemas import FuzzyClause


class Axis(str, Enum):
    """Steering axes; lateral conclusions are written before longitudinal ones."""
    LATERAL = "lateral"
    LONGITUDINAL = "longitudinal"


DIRECTION_AXES = {
    "left": Axis.LATERAL,
    "right": Axis.LATERAL,
    "front": Axis.LONGITUDINAL,
    "rear": Axis.LONGITUDINAL,
}

AXIS_ORDER = {Axis.LATERAL: 0, Axis.LONGITUDINAL: 1}


class RuleSourceSpan(BaseModel):
    """Location of a token in rule text (1-based)."""
    model_config = ConfigDict(frozen=True)

    line: int = Field(..., ge=1)
    column: int = Field(..., ge=1)
    length: int = Field(1, ge=1)

    def __str__(self) -> str:
        return f"{self.line}:{self.column}"


class SymbolTable(BaseModel):
    """
    Input variables with their terms, and the support directions.

    Each direction word maps to an (output variable, term) pair: left/right on the lateral
    output, front/rear on the longitudinal output.
    """
    model_config = ConfigDict(frozen=True)

    input_vars: Dict[str, Tuple[str, ...]]
    direction_map: Dict[str, Tuple[str, str]]
    lateral_output: str = "steer_x"
    longitudinal_output: str = "steer_y"

    @model_validator(mode="after")
    def validate_directions(self) -> "SymbolTable":
        """Ensure the four directions land on the right outputs."""
        if set(self.direction_map) != set(DIRECTION_AXES):
            raise ValueError(
                f"Direction words must be exactly {sorted(DIRECTION_AXES)}, got {sorted(self.direction_map)}"
            )
        if self.lateral_output == self.longitudinal_output:
            raise ValueError("Lateral and longitudinal outputs must differ")
        for direction, (variable, _term) in self.direction_map.items():
            expected = self.output_for(DIRECTION_AXES[direction])
            if variable != expected:
                raise ValueError(f"Direction {direction} must map to {expected}, got {variable}")
        if len(set(self.direction_map.values())) != len(self.direction_map):
            raise ValueError("Two directions map to the same output term")
        if not self.input_vars:
            raise ValueError("Symbol table needs at least one input variable")
        return self

    def output_for(self, axis: Axis) -> str:
        return self.lateral_output if axis is Axis.LATERAL else self.longitudinal_output

    def resolve_variable(self, name: str) -> Optional[str]:
        """Declared input variable matching name case-insensitively."""
        lowered = name.lower()
        for declared in self.input_vars:
            if declared.lower() == lowered:
                return declared
        return None

    def resolve_term(self, variable: str, term: str) -> Optional[str]:
        lowered = term.lower()
        for declared in self.input_vars[variable]:
            if declared.lower() == lowered:
                return declared
        return None

    def clause_for(self, direction: str) -> FuzzyClause:
        variable, term = self.direction_map[direction]
        return FuzzyClause(variable=variable, term=term)

    def direction_for(self, clause: FuzzyClause) -> Optional[str]:
        """Direction word whose consequent is this clause."""
        for direction, (variable, term) in self.direction_map.items():
            if variable == clause.variable and term == clause.term:
                return direction
        return None
