"""Interestingness measures package for the Higher-Order Pattern Miner."""

from .registry import (
    ALIASES,
    MEASURES,
    MeasureSpec,
    MeasureValue,
    all_confidence,
    bond,
    compare,
    dependence,
    evaluate_measure,
    lift,
    measure_names,
    measure_registry,
    resolve_measure,
    support_measure,
)

__all__ = [
    "ALIASES",
    "MEASURES",
    "MeasureSpec",
    "MeasureValue",
    "all_confidence",
    "bond",
    "compare",
    "dependence",
    "evaluate_measure",
    "lift",
    "measure_names",
    "measure_registry",
    "resolve_measure",
    "support_measure",
]
