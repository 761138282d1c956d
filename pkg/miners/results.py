"""
Result types returned by the pattern miners, with their JSON-lines records.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from database.transaction_db import Pattern, TransactionDatabase
from measures.registry import MeasureValue

FREQUENT = "frequent"
CLOSED = "closed"
MAXIMAL = "maximal"
CLIQUE = "clique"
ALL_CORRELATION = "all_correlation"
UNEXPECTED_CORRELATION = "unexpected_correlation"


def _sorted_labels(db: TransactionDatabase, pattern) -> List[str]:
    return sorted(db.labels_of(pattern))


def _count_fields(name: str, count: int, n: int) -> Dict[str, object]:
    return {name: float(Fraction(count, n)), f"{name}_fraction": f"{count}/{n}"}


def _measure_field(value: MeasureValue) -> Optional[float]:
    return value.value


@dataclass(frozen=True)
class FoundPattern:
    """
    A mined pattern with its exact support and any extra measures.

    Attributes:
        pattern: The itemset.
        kind: Pattern family tag (frequent, closed, maximal, clique, ...).
        support_count: Number of transactions containing pattern.
        n: Number of transactions in the database.
        measures: Additional measure values keyed by name.
    """

    pattern: Pattern
    kind: str
    support_count: int
    n: int
    measures: Dict[str, MeasureValue] = field(default_factory=dict, hash=False)

    @property
    def support(self) -> Fraction:
        return Fraction(self.support_count, self.n)

    def to_record(self, db: TransactionDatabase) -> Dict[str, object]:
        measures = _count_fields("support", self.support_count, self.n)
        for name in sorted(self.measures):
            measures[name] = _measure_field(self.measures[name])
        return {"kind": self.kind, "items": _sorted_labels(db, self.pattern), "measures": measures}


@dataclass(frozen=True)
class IndirectAssociation:
    """
    Rare pair (a, b) tied to a common mediator set.

    Attributes:
        a, b: Item ids, a < b, neither in mediator.
        mediator: The mediator pattern M.
        pair_count: Transactions containing both a and b.
        mediator_counts: Transactions containing {a} u M and {b} u M.
        dependences: d({a}, M) and d({b}, M).
        dependence_measure: Measure used for the dependence condition.
    """

    a: int
    b: int
    mediator: Pattern
    pair_count: int
    mediator_counts: Tuple[int, int]
    dependences: Tuple[MeasureValue, MeasureValue]
    n: int
    dependence_measure: str = "lift"

    @property
    def pair_support(self) -> Fraction:
        return Fraction(self.pair_count, self.n)

    @property
    def mediator_supports(self) -> Tuple[Fraction, Fraction]:
        return tuple(Fraction(count, self.n) for count in self.mediator_counts)

    @property
    def key(self) -> Tuple[int, int, Pattern]:
        return (self.a, self.b, self.mediator)

    def to_record(self, db: TransactionDatabase) -> Dict[str, object]:
        measures: Dict[str, object] = {}
        measures.update(_count_fields("pair_support", self.pair_count, self.n))
        measures.update(_count_fields("mediator_support_a", self.mediator_counts[0], self.n))
        measures.update(_count_fields("mediator_support_b", self.mediator_counts[1], self.n))
        measures["dependence_a"] = _measure_field(self.dependences[0])
        measures["dependence_b"] = _measure_field(self.dependences[1])
        measures["dependence_measure"] = self.dependence_measure
        return {
            "kind": "indirect",
            "items": _sorted_labels(db, (self.a, self.b) + self.mediator),
            "a": db.label_of(self.a),
            "b": db.label_of(self.b),
            "mediator": _sorted_labels(db, self.mediator),
            "measures": measures,
        }


@dataclass(frozen=True)
class StarPattern:
    """A mediator center with two or more mutually rare leaves."""

    center: Pattern
    leaves: Pattern
    center_count: int
    n: int

    def to_record(self, db: TransactionDatabase) -> Dict[str, object]:
        return {
            "kind": "star",
            "items": _sorted_labels(db, self.center + self.leaves),
            "center": _sorted_labels(db, self.center),
            "leaves": _sorted_labels(db, self.leaves),
            "measures": _count_fields("center_support", self.center_count, self.n),
        }


@dataclass(frozen=True)
class BicliquePattern:
    """
    Two disjoint item sets whose cross pairs are frequent and whose
    within-side pairs are not. w is the side whose sorted labels come first.
    """

    w: Pattern
    v: Pattern
    support_count: int
    min_cross_count: int
    n: int

    def to_record(self, db: TransactionDatabase) -> Dict[str, object]:
        return {
            "kind": "biclique",
            "items": _sorted_labels(db, self.w + self.v),
            "w": _sorted_labels(db, self.w),
            "v": _sorted_labels(db, self.v),
            "measures": {
                **_count_fields("support", self.support_count, self.n),
                **_count_fields("min_cross_support", self.min_cross_count, self.n),
            },
        }
