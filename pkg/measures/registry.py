"""
Interestingness measures for the Higher-Order Pattern Miner.

All measures are ratios of transaction counts, so values are computed as
exact Fractions. A measure whose denominator vanishes is undefined rather
than infinite, and every comparison against an undefined value is false.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Callable, Dict, Optional, Sequence, Tuple

from config import Config
from database.transaction_db import TransactionDatabase, as_fraction
from errors import ArityError, MeasureArgumentError, UndefinedSupportError, UnknownMeasureError


@dataclass(frozen=True)
class MeasureValue:
    """Tri-state measure result: exact value, or undefined when exact is None."""

    exact: Optional[Fraction]

    @classmethod
    def undefined(cls) -> "MeasureValue":
        return cls(None)

    @property
    def defined(self) -> bool:
        return self.exact is not None

    @property
    def value(self) -> Optional[float]:
        return None if self.exact is None else float(self.exact)

    def __str__(self) -> str:
        return "undefined" if self.exact is None else f"{float(self.exact):.12g}"


def _ratio(numerator: int, denominator: int) -> MeasureValue:
    if denominator == 0:
        return MeasureValue.undefined()
    return MeasureValue(Fraction(numerator, denominator))


def _require_rows(db: TransactionDatabase) -> None:
    if db.n == 0:
        raise UndefinedSupportError("measures are undefined on an empty database")


def support_measure(db: TransactionDatabase, pattern: Sequence[int]) -> MeasureValue:
    return MeasureValue(db.support(pattern))


def lift(db: TransactionDatabase, pattern: Sequence[int]) -> MeasureValue:
    """
    support(X) divided by the product of its singleton supports.

    Raises:
        ArityError: If X has fewer than two items.
    """
    if len(pattern) < 2:
        raise ArityError(f"lift needs at least 2 items, got {len(pattern)}")
    _require_rows(db)
    singles = [db.support_count((item_id,)) for item_id in pattern]
    # count(X)/n / prod(c_i/n) == count(X) * n^(k-1) / prod(c_i)
    return _ratio(db.support_count(pattern) * db.n ** (len(pattern) - 1), prod(singles))


def all_confidence(db: TransactionDatabase, pattern: Sequence[int]) -> MeasureValue:
    """support(X) over the largest singleton support in X."""
    if len(pattern) < 1:
        raise ArityError("all-confidence needs a non-empty pattern")
    _require_rows(db)
    largest = max(db.support_count((item_id,)) for item_id in pattern)
    return _ratio(db.support_count(pattern), largest)


def bond(db: TransactionDatabase, pattern: Sequence[int]) -> MeasureValue:
    """Transactions containing all of X over transactions containing any of X."""
    if len(pattern) < 1:
        raise ArityError("bond needs a non-empty pattern")
    _require_rows(db)
    union = 0
    for item_id in pattern:
        union |= db.item_tidsets[item_id]
    return _ratio(db.support_count(pattern), bin(union).count("1"))


def dependence(db: TransactionDatabase, left: Sequence[int], right: Sequence[int]) -> MeasureValue:
    """
    Lift-style dependence support(P u Q) / (support(P) * support(Q)).

    Raises:
        MeasureArgumentError: If either side is empty or the sides overlap.
    """
    if not left or not right:
        raise MeasureArgumentError("dependence needs two non-empty patterns")
    if set(left) & set(right):
        raise MeasureArgumentError("dependence arguments must be disjoint")
    _require_rows(db)
    joint = db.support_count(tuple(sorted(set(left) | set(right))))
    return _ratio(joint * db.n, db.support_count(left) * db.support_count(right))


@dataclass(frozen=True)
class MeasureSpec:
    """Registry entry: canonical name, number of pattern arguments, implementation."""

    name: str
    arity: int
    func: Callable[..., MeasureValue]
    exact: bool = False


MEASURES: Dict[str, MeasureSpec] = {
    "support": MeasureSpec("support", 1, support_measure, exact=True),
    "lift": MeasureSpec("lift", 1, lift),
    "allconf": MeasureSpec("allconf", 1, all_confidence),
    "bond": MeasureSpec("bond", 1, bond),
    "d": MeasureSpec("d", 2, dependence),
}

ALIASES: Dict[str, str] = {
    "col": "lift",
    "hconf": "allconf",
}


def resolve_measure(name: str) -> MeasureSpec:
    """Look up a measure by canonical name or alias."""
    canonical = ALIASES.get(name, name)
    try:
        return MEASURES[canonical]
    except KeyError:
        known = ", ".join(sorted(set(MEASURES) | set(ALIASES)))
        raise UnknownMeasureError(f"unknown measure {name!r}; expected one of: {known}") from None


def measure_names() -> Tuple[str, ...]:
    """Every accepted spelling, canonical names and aliases."""
    return tuple(sorted(set(MEASURES) | set(ALIASES)))


def measure_registry() -> Dict[str, int]:
    """Canonical measure names mapped to their arity."""
    return {name: definition.arity for name, definition in MEASURES.items()}


def evaluate_measure(db: TransactionDatabase, name: str, *patterns: Sequence[int]) -> MeasureValue:
    """
    Evaluate a registered measure, mapping shape problems to undefined.

    Arity and argument errors become an undefined value so constraint
    evaluation and curves stay total.
    """
    definition = resolve_measure(name)
    if len(patterns) != definition.arity:
        raise ArityError(f"measure {definition.name} takes {definition.arity} argument(s), got {len(patterns)}")
    try:
        return definition.func(db, *patterns)
    except (ArityError, MeasureArgumentError):
        return MeasureValue.undefined()


_OPERATORS = {
    ">=": operator.ge,
    ">": operator.gt,
    "<=": operator.le,
    "<": operator.lt,
    "==": operator.eq,
    "!=": operator.ne,
}


def compare(left, op: str, right, exact: bool = False, tolerance: Optional[float] = None) -> bool:
    """
    Compare two numeric operands under one of the six comparison operators.

    Operands may be MeasureValues, Fractions, ints or floats. Undefined on
    either side makes the comparison false. With exact=True the operands are
    compared as Fractions; otherwise values within tolerance count as equal.
    """
    left = _unwrap(left)
    right = _unwrap(right)
    if left is None or right is None:
        return False
    if exact:
        return _OPERATORS[op](left, right)

    tol = Config.MEASURE_TOLERANCE if tolerance is None else tolerance
    diff = float(left) - float(right)
    if op == ">=":
        return diff >= -tol
    if op == ">":
        return diff > tol
    if op == "<=":
        return diff <= tol
    if op == "<":
        return diff < -tol
    if op == "==":
        return abs(diff) <= tol
    if op == "!=":
        return abs(diff) > tol
    raise ValueError(f"unknown comparison operator {op!r}")


def _unwrap(operand) -> Optional[Fraction]:
    if isinstance(operand, MeasureValue):
        return operand.exact
    if operand is None:
        return None
    return as_fraction(operand)
