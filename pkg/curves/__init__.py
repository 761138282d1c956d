"""Sub-pattern interestingness curve package for the Higher-Order Pattern Miner."""

from .interestingness import (
    CurvePoint,
    InterestingnessCurve,
    compute_curve,
    curve_to_record,
    dominance_violations,
    export_curve_csv,
    levelwise_order,
)

__all__ = [
    "CurvePoint",
    "InterestingnessCurve",
    "compute_curve",
    "curve_to_record",
    "dominance_violations",
    "export_curve_csv",
    "levelwise_order",
]
