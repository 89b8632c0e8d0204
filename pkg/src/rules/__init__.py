"""Natural-language rule syntax."""
from src.rules.errors import (
    ConflictingConsequent,
    DuplicateAntecedent,
    EmptyRuleBase,
    RuleError,
    RuleFileError,
    RuleSyntaxError,
    UnknownTerm,
    UnknownVariable,
)
from src.rules.formatter import format_rule, format_rule_file
from src.rules.parser import RuleParser, parse_rule, parse_rule_file
from src.rules.symbols import Axis, RuleSourceSpan, SymbolTable

__all__ = [
    "ConflictingConsequent",
    "DuplicateAntecedent",
    "EmptyRuleBase",
    "RuleError",
    "RuleFileError",
    "RuleSyntaxError",
    "UnknownTerm",
    "UnknownVariable",
    "format_rule",
    "format_rule_file",
    "RuleParser",
    "parse_rule",
    "parse_rule_file",
    "Axis",
    "RuleSourceSpan",
    "SymbolTable",
]
