"""Pytest configuration and fixtures."""
from pathlib import Path

import pytest

from src.controller.treadmill import default_paper_controller, treadmill_symbol_table
from src.core.engine import MamdaniEngine
from src.core.schemas import (
    FuzzyClause,
    FuzzyRule,
    LinguisticVariable,
    MembershipFunction,
    RuleBase,
    Universe,
)

FIXTURES_DIR = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture
def fixtures_dir():
    """Directory holding rule and track data files."""
    return FIXTURES_DIR


@pytest.fixture
def symbols():
    """Symbol table of the treadmill rules."""
    return treadmill_symbol_table()


@pytest.fixture
def treadmill_engine():
    """The shared treadmill controller."""
    return default_paper_controller()


@pytest.fixture
def distance_var():
    """Input on [0, 500] with complementary near/far ramps."""
    return LinguisticVariable(
        name="distance",
        universe=Universe(lo=0, hi=500),
        terms={
            "near": MembershipFunction.ramp_down(0, 500),
            "far": MembershipFunction.ramp_up(0, 500),
        },
    )


@pytest.fixture
def push_var():
    """Output on [0, 100] with low/high ramps over the outer 20 units."""
    return LinguisticVariable(
        name="push",
        universe=Universe(lo=0, hi=100),
        terms={
            "low": MembershipFunction.ramp_down(0, 20),
            "high": MembershipFunction.ramp_up(80, 100),
        },
    )


@pytest.fixture
def tiny_engine(distance_var, push_var):
    """near -> high, far -> low."""
    rules = RuleBase(rules=(
        FuzzyRule(
            antecedent=(FuzzyClause(variable="distance", term="near"),),
            consequent=(FuzzyClause(variable="push", term="high"),),
        ),
        FuzzyRule(
            antecedent=(FuzzyClause(variable="distance", term="far"),),
            consequent=(FuzzyClause(variable="push", term="low"),),
        ),
    ))
    return MamdaniEngine(inputs=[distance_var], outputs=[push_var], rule_base=rules)
