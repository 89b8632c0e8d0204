"""Rule parser: converts rule text such as
"If front is far and rear is near then support is front." to FuzzyRule values.

Grammar (keywords and identifiers case-insensitive, trailing period optional):

    rule      := "If" clause ("and" clause)* "then" "support" "is" direction ("and" direction)*
    clause    := IDENT "is" IDENT
    direction := "front" | "rear" | "left" | "right"
"""
import re
from typing import List, NamedTuple, Optional

from src.core.schemas import FuzzyClause, FuzzyRule, RuleBase
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
from src.rules.symbols import AXIS_ORDER, DIRECTION_AXES, RuleSourceSpan, SymbolTable
from src.utils.logging import setup_logger

logger = setup_logger(__name__)

KEYWORDS = {"if", "and", "then", "support", "is"}
COMMENT_PREFIX = "#"

_TOKEN = re.compile(r"(?P<space>\s+)|(?P<word>[A-Za-z_]+)|(?P<period>\.)|(?P<other>\S)")


class Token(NamedTuple):
    kind: str
    text: str
    column: int


def tokenize(text: str) -> List[Token]:
    """Split one line into words, periods and stray characters, with 1-based columns."""
    tokens = []
    for match in _TOKEN.finditer(text):
        kind = match.lastgroup
        if kind != "space":
            tokens.append(Token(kind, match.group(), match.start() + 1))
    return tokens


class _RuleReader:
    """Recursive-descent reader over the tokens of one rule."""

    def __init__(self, text: str, line: int, symbols: SymbolTable):
        self.tokens = tokenize(text)
        self.end_column = len(text.rstrip()) + 1
        self.line = line
        self.symbols = symbols
        self.pos = 0

    def _span(self, token: Optional[Token]) -> RuleSourceSpan:
        if token is None:
            return RuleSourceSpan(line=self.line, column=self.end_column, length=1)
        return RuleSourceSpan(line=self.line, column=token.column, length=len(token.text))

    def _peek(self) -> Optional[Token]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _next(self) -> Optional[Token]:
        token = self._peek()
        if token is not None:
            self.pos += 1
        return token

    def _at_keyword(self, keyword: str) -> bool:
        token = self._peek()
        return token is not None and token.kind == "word" and token.text.lower() == keyword

    def _expect_keyword(self, keyword: str) -> Token:
        token = self._next()
        if token is None or token.kind != "word" or token.text.lower() != keyword:
            raise RuleSyntaxError(
                repr(keyword),
                token.text if token else "end of rule",
                self._span(token)
            )
        return token

    def _expect_word(self, expected: str) -> Token:
        token = self._next()
        if token is None or token.kind != "word" or token.text.lower() in KEYWORDS:
            raise RuleSyntaxError(expected, token.text if token else "end of rule", self._span(token))
        return token

    def read(self) -> FuzzyRule:
        self._expect_keyword("if")
        antecedent = [self._clause([])]
        while self._at_keyword("and"):
            self._next()
            antecedent.append(self._clause(antecedent))

        self._expect_keyword("then")
        self._expect_keyword("support")
        self._expect_keyword("is")

        consequent = [self._direction([])]
        while self._at_keyword("and"):
            self._next()
            consequent.append(self._direction(consequent))

        token = self._peek()
        if token is not None and token.kind == "period":
            self._next()
        token = self._peek()
        if token is not None:
            raise RuleSyntaxError("end of rule", token.text, self._span(token))

        consequent.sort(key=lambda item: AXIS_ORDER[DIRECTION_AXES[item[0]]])
        return FuzzyRule(
            antecedent=tuple(antecedent),
            consequent=tuple(self.symbols.clause_for(direction) for direction, _ in consequent)
        )

    def _clause(self, seen: List[FuzzyClause]) -> FuzzyClause:
        var_token = self._expect_word("variable name")
        variable = self.symbols.resolve_variable(var_token.text)
        if variable is None:
            raise UnknownVariable(var_token.text, self._span(var_token))
        if any(clause.variable == variable for clause in seen):
            raise DuplicateAntecedent(variable, self._span(var_token))

        self._expect_keyword("is")

        term_token = self._expect_word("term name")
        term = self.symbols.resolve_term(variable, term_token.text)
        if term is None:
            raise UnknownTerm(variable, term_token.text, self._span(term_token))
        return FuzzyClause(variable=variable, term=term)

    def _direction(self, seen: List[tuple]) -> tuple:
        token = self._next()
        word = token.text.lower() if token is not None and token.kind == "word" else None
        if word not in DIRECTION_AXES:
            raise RuleSyntaxError(
                "front, rear, left or right",
                token.text if token else "end of rule",
                self._span(token)
            )
        axis = DIRECTION_AXES[word]
        if any(DIRECTION_AXES[direction] is axis for direction, _ in seen):
            raise ConflictingConsequent(axis.value, self._span(token))
        return word, token


class RuleParser:
    """Parse rule statements and rule files against a symbol table."""

    def __init__(self, symbols: SymbolTable):
        """
        Initialize parser.

        Args:
            symbols: Variables, terms and directions identifiers resolve against
        """
        self.symbols = symbols

    def parse(self, text: str, line: int = 1) -> FuzzyRule:
        """
        Parse a single rule statement.

        Args:
            text: One rule, e.g. "If front is far and rear is near then support is front."
            line: Line number used in error spans

        Returns:
            FuzzyRule with consequents ordered lateral before longitudinal

        Raises:
            RuleError: UnknownVariable, UnknownTerm, RuleSyntaxError, ConflictingConsequent
                or DuplicateAntecedent, located by span
        """
        return _RuleReader(text, line, self.symbols).read()

    def parse_file(self, text: str) -> RuleBase:
        """
        Parse newline-separated rules; blank lines and '#' comments are skipped.

        Args:
            text: Rule file contents

        Returns:
            RuleBase in file order

        Raises:
            RuleFileError: Every error in the file, first one first
            EmptyRuleBase: If the file holds no rules
        """
        rules = []
        errors: List[RuleError] = []

        for number, raw in enumerate(text.lstrip("\ufeff").splitlines(), start=1):
            stripped = raw.strip()
            if not stripped or stripped.startswith(COMMENT_PREFIX):
                continue
            try:
                rules.append(self.parse(raw, line=number))
            except RuleError as e:
                errors.append(e)

        if errors:
            logger.warning(f"Rule file rejected with {len(errors)} error(s); first at {errors[0].span}")
            raise RuleFileError(errors)
        if not rules:
            raise EmptyRuleBase()

        logger.info(f"Parsed rule file: {len(rules)} rules")
        return RuleBase(rules=tuple(rules))


def parse_rule(text: str, symbols: SymbolTable, line: int = 1) -> FuzzyRule:
    """Parse one rule; see RuleParser.parse."""
    return RuleParser(symbols).parse(text, line=line)


def parse_rule_file(text: str, symbols: SymbolTable) -> RuleBase:
    """Parse a rule file; see RuleParser.parse_file."""
    return RuleParser(symbols).parse_file(text)
