"""Constraint language package for the Higher-Order Pattern Miner."""

from .ast_nodes import ConstraintAst, free_variables, pretty_print
from .evaluator import (
    ConstraintEvaluator,
    EdgeCondition,
    EvaluationTrace,
    edge_condition,
    evaluate_constraint,
    holds,
    pattern_space_size,
    satisfying_subpatterns,
)
from .parser import parse_constraint, parse_edge_constraint, tokenize
from .templates import (
    all_correlation_constraint,
    classify_triple_case,
    clique_constraint,
    frequent_constraint,
    unexpected_correlation_constraint,
)

__all__ = [
    "ConstraintAst",
    "ConstraintEvaluator",
    "EdgeCondition",
    "EvaluationTrace",
    "all_correlation_constraint",
    "classify_triple_case",
    "clique_constraint",
    "edge_condition",
    "evaluate_constraint",
    "free_variables",
    "frequent_constraint",
    "holds",
    "parse_constraint",
    "parse_edge_constraint",
    "pattern_space_size",
    "pretty_print",
    "satisfying_subpatterns",
    "tokenize",
    "unexpected_correlation_constraint",
]
