"""
Sub-pattern interestingness curves.

A curve lists every non-empty sub-pattern of X in levelwise order (by
length, then lexicographically by item label) with its measure value.
Undefined values stay undefined so plots show gaps, not zeros.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from database.transaction_db import Pattern, TransactionDatabase, make_pattern, nonempty_subsets
from errors import ArityError
from measures.registry import MeasureValue, compare, evaluate_measure, resolve_measure
from utils.logger import MiningLogger

CSV_HEADER = ("index", "subpattern", "level", "measure", "value")


@dataclass(frozen=True)
class CurvePoint:
    pattern: Pattern
    labels: Tuple[str, ...]
    level: int
    value: MeasureValue


@dataclass(frozen=True)
class InterestingnessCurve:
    pattern: Pattern
    measure: str
    points: Tuple[CurvePoint, ...]


def levelwise_order(
    pattern: Sequence[int],
    cap: Optional[int] = None,
    order_key: Optional[Callable[[int], object]] = None,
) -> List[Pattern]:
    """
    Non-empty sub-patterns of pattern, shortest first, lexicographic within
    a length.

    Raises:
        EnumerationCapError: If pattern is longer than the cap.
    """
    return list(nonempty_subsets(make_pattern(pattern), cap, order_key))


def compute_curve(
    db: TransactionDatabase,
    pattern: Sequence[int],
    measure: str,
    cap: Optional[int] = None,
) -> InterestingnessCurve:
    """
    Measure every sub-pattern of pattern in levelwise label order.

    Raises:
        ArityError: For measures taking two patterns.
        EnumerationCapError: If pattern is longer than the cap.
    """
    definition = resolve_measure(measure)
    if definition.arity != 1:
        raise ArityError(f"curves need a single-pattern measure; {definition.name} takes {definition.arity}")
    pattern = make_pattern(pattern)
    ordered = levelwise_order(pattern, cap, order_key=db.label_of)

    def ranked_labels(sub: Pattern) -> Tuple[str, ...]:
        return tuple(sorted(db.labels_of(sub)))

    points = tuple(
        CurvePoint(sub, ranked_labels(sub), len(sub), evaluate_measure(db, definition.name, sub))
        for sub in ordered
    )
    MiningLogger.get_logger(__name__).debug(f"computed {definition.name} curve with {len(points)} points")
    return InterestingnessCurve(pattern, definition.name, points)


def format_value(value: MeasureValue) -> str:
    return "" if not value.defined else f"{value.value:.12g}"


def export_curve_csv(curve: InterestingnessCurve) -> str:
    """CSV with one row per point; undefined values are empty fields."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for index, point in enumerate(curve.points, start=1):
        writer.writerow((index, "+".join(point.labels), point.level, curve.measure, format_value(point.value)))
    return buffer.getvalue()


def curve_to_record(curve: InterestingnessCurve) -> Dict[str, object]:
    return {
        "measure": curve.measure,
        "points": [
            {
                "index": index,
                "subpattern": list(point.labels),
                "level": point.level,
                "value": point.value.value,
            }
            for index, point in enumerate(curve.points, start=1)
        ],
    }


def dominance_violations(curve: InterestingnessCurve) -> List[Tuple[int, int]]:
    """
    (subset index, superset index) pairs, 1-based, where the superset's
    value is strictly larger than the subset's. Undefined points are skipped.
    Always empty for support curves.
    """
    violations = []
    exact = resolve_measure(curve.measure).exact
    for i, low in enumerate(curve.points, start=1):
        for j, high in enumerate(curve.points, start=1):
            if len(high.pattern) <= len(low.pattern) or not set(low.pattern) < set(high.pattern):
                continue
            if compare(high.value, ">", low.value, exact=exact):
                violations.append((i, j))
    return violations
