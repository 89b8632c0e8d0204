"""Rule base validation against declared variables."""
from typing import Dict, List, Sequence

from src.core.schemas import FuzzyRule, LinguisticVariable, RuleBase, ValidationResult
from src.utils.logging import setup_logger

logger = setup_logger(__name__)


class RuleBaseValidator:
    """Validate variables and rules before an engine is assembled."""

    @staticmethod
    def validate(
        inputs: Sequence[LinguisticVariable],
        outputs: Sequence[LinguisticVariable],
        rule_base: RuleBase
    ) -> ValidationResult:
        """
        Validate a rule base against input and output variables.

        Args:
            inputs: Input variables
            outputs: Output variables
            rule_base: Rules to check

        Returns:
            ValidationResult with pass/fail and feedback
        """
        failed_checks = []

        if not inputs:
            failed_checks.append("Engine needs at least one input variable")
        if not outputs:
            failed_checks.append("Engine needs at least one output variable")

        names = [v.name for v in list(inputs) + list(outputs)]
        duplicates = sorted({n for n in names if names.count(n) > 1})
        if duplicates:
            failed_checks.append(f"Variable names declared twice: {', '.join(duplicates)}")

        input_terms = {v.name: set(v.terms) for v in inputs}
        output_terms = {v.name: set(v.terms) for v in outputs}

        for index, rule in enumerate(rule_base.rules, start=1):
            failed_checks.extend(
                RuleBaseValidator._check_rule(index, rule, input_terms, output_terms)
            )

        passed = len(failed_checks) == 0

        if passed:
            feedback = f"Rule base valid: {len(rule_base)} rules"
        else:
            feedback = "Rule base invalid. Issues:\n" + "\n".join(f"- {check}" for check in failed_checks)

        logger.debug(f"Rule base validation: {'PASSED' if passed else 'FAILED'}")

        return ValidationResult(
            passed=passed,
            feedback=feedback,
            failed_checks=failed_checks
        )

    @staticmethod
    def _check_rule(
        index: int,
        rule: FuzzyRule,
        input_terms: Dict[str, set],
        output_terms: Dict[str, set]
    ) -> List[str]:
        """
        Check one rule's clauses resolve on the right side of the engine.

        Args:
            index: 1-based rule position
            rule: Rule to check
            input_terms: Input variable -> terms
            output_terms: Output variable -> terms

        Returns:
            Failed checks for this rule
        """
        failed = []

        for clause in rule.antecedent:
            if clause.variable in output_terms:
                failed.append(f"Rule {index}: output variable {clause.variable} used in antecedent")
            elif clause.variable not in input_terms:
                failed.append(f"Rule {index}: unknown input variable {clause.variable}")
            elif clause.term not in input_terms[clause.variable]:
                failed.append(f"Rule {index}: unknown term {clause.variable}.{clause.term}")

        for clause in rule.consequent:
            if clause.variable in input_terms:
                failed.append(f"Rule {index}: input variable {clause.variable} used in consequent")
            elif clause.variable not in output_terms:
                failed.append(f"Rule {index}: unknown output variable {clause.variable}")
            elif clause.term not in output_terms[clause.variable]:
                failed.append(f"Rule {index}: unknown term {clause.variable}.{clause.term}")

        return failed
