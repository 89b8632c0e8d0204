"""Errors raised while parsing rule text."""
from typing import List, Sequence

from src.rules.symbols import RuleSourceSpan


class RuleError(ValueError):
    """A rule text problem located by a source span."""

    def __init__(self, message: str, span: RuleSourceSpan):
        self.message = message
        self.span = span
        super().__init__(f"{span}: {message}")


class UnknownVariable(RuleError):
    def __init__(self, name: str, span: RuleSourceSpan):
        self.name = name
        super().__init__(f"unknown variable {name!r}", span)


class UnknownTerm(RuleError):
    def __init__(self, variable: str, term: str, span: RuleSourceSpan):
        self.variable = variable
        self.term = term
        super().__init__(f"unknown term {term!r} for variable {variable!r}", span)


class RuleSyntaxError(RuleError):
    def __init__(self, expected: str, found: str, span: RuleSourceSpan):
        self.expected = expected
        self.found = found
        super().__init__(f"expected {expected}, found {found!r}", span)


class ConflictingConsequent(RuleError):
    """Two directions on the same steering axis in one consequent."""

    def __init__(self, axis: str, span: RuleSourceSpan):
        self.axis = axis
        super().__init__(f"conflicting {axis} directions in consequent", span)


class DuplicateAntecedent(RuleError):
    def __init__(self, variable: str, span: RuleSourceSpan):
        self.variable = variable
        super().__init__(f"variable {variable!r} appears twice in antecedent", span)


class EmptyRuleBase(RuleError):
    def __init__(self, span: RuleSourceSpan = RuleSourceSpan(line=1, column=1, length=1)):
        super().__init__("rule file contains no rules", span)


class RuleFileError(RuleError):
    """Every error found in one rule file, in file order."""

    def __init__(self, errors: Sequence[RuleError]):
        if not errors:
            raise ValueError("RuleFileError needs at least one error")
        self.errors: List[RuleError] = list(errors)
        first = self.errors[0]
        super().__init__(first.message, first.span)

    def __str__(self) -> str:
        return "\n".join(str(error) for error in self.errors)
