"""Canonical text for rules."""
from src.core.errors import ConfigurationError
from src.core.schemas import FuzzyRule, RuleBase
from src.rules.symbols import AXIS_ORDER, DIRECTION_AXES, SymbolTable


def format_rule(rule: FuzzyRule, symbols: SymbolTable) -> str:
    """
    Render a rule in canonical form.

    "If <v> is <t> and ... then support is <d>[ and <d>]." with lateral directions first.

    Args:
        rule: Rule to render
        symbols: Symbol table the rule resolves against

    Returns:
        Canonical rule text

    Raises:
        ConfigurationError: If a clause has no counterpart in the symbol table
    """
    for clause in rule.antecedent:
        terms = symbols.input_vars.get(clause.variable)
        if terms is None or clause.term not in terms:
            raise ConfigurationError(f"Antecedent clause does not resolve: {clause}")

    directions = []
    for clause in rule.consequent:
        direction = symbols.direction_for(clause)
        if direction is None:
            raise ConfigurationError(f"Consequent clause has no support direction: {clause}")
        directions.append(direction)
    directions.sort(key=lambda d: AXIS_ORDER[DIRECTION_AXES[d]])

    conditions = " and ".join(f"{c.variable} is {c.term}" for c in rule.antecedent)
    return f"If {conditions} then support is {' and '.join(directions)}."


def format_rule_file(rule_base: RuleBase, symbols: SymbolTable) -> str:
    """
    Render a rule base as a rule file, one canonical rule per line.

    Args:
        rule_base: Rules to render
        symbols: Symbol table

    Returns:
        File text ending with a newline
    """
    return "".join(format_rule(rule, symbols) + "\n" for rule in rule_base.rules)
