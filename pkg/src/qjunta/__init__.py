"""Simulated quantum testing of junta variables in Boolean functions."""

from .boolfn import (
    AnfFunction,
    TruthTable,
    derive_g,
    from_truth_table,
    influence,
    is_junta_ground_truth,
    negate_variable,
    parse_anf,
    to_truth_table,
)
from .search import SearchBudget, search_known_m, search_unknown_m
from .tester import TestConfig, TestReport, Verdict, build_g_oracle, test_all_variables, test_variable

__version__ = "0.1.0"

__all__ = [
    "AnfFunction",
    "SearchBudget",
    "TestConfig",
    "TestReport",
    "TruthTable",
    "Verdict",
    "build_g_oracle",
    "derive_g",
    "from_truth_table",
    "influence",
    "is_junta_ground_truth",
    "negate_variable",
    "parse_anf",
    "search_known_m",
    "search_unknown_m",
    "test_all_variables",
    "test_variable",
    "to_truth_table",
]
