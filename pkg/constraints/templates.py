"""
Named constraint templates and the three-item association case classifier.
"""

from __future__ import annotations

from decimal import Decimal
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from database.transaction_db import TransactionDatabase, make_pattern
from errors import ArityError
from measures.registry import compare, evaluate_measure, resolve_measure


def number_literal(value) -> str:
    """Render a threshold as a plain decimal the constraint lexer accepts."""
    if isinstance(value, str):
        return value
    if isinstance(value, Fraction):
        decimal = Decimal(value.numerator) / Decimal(value.denominator)
    elif isinstance(value, float):
        decimal = Decimal(repr(value))
    else:
        decimal = Decimal(value)
    text = format(decimal, "f")
    if "." in text:
        text = text.rstrip("0").rstrip(".") or "0"
    return text


def frequent_constraint(minisupport) -> str:
    return f"forall S in sub(X) : support(S) >= {number_literal(minisupport)}"


def clique_constraint(minisupport) -> str:
    return f"forall S in sub(X) where len(S) == 2 : support(S) >= {number_literal(minisupport)}"


def all_correlation_constraint(min_correlation) -> str:
    return f"forall S in sub(X) where len(S) >= 2 : col(S) >= {number_literal(min_correlation)}"


def unexpected_correlation_constraint(min_correlation) -> str:
    threshold = number_literal(min_correlation)
    return (
        f"col(X) >= {threshold} and "
        f"forall S in sub(X) where len(S) >= 2 and S != X : col(S) < {threshold}"
    )


TWO_PAIRS = "two_pairs"
ALL_PAIRS_NO_TRIPLE = "all_pairs_no_triple"
TRIPLE_ONLY = "triple_only"
TRIPLE_AND_ALL_PAIRS = "triple_and_all_pairs"
OTHER = "other"


def classify_triple_case(
    db: TransactionDatabase,
    pattern: Sequence[int],
    measure: str = "lift",
    threshold=1.0,
) -> str:
    """
    Name the association topology of a three-item pattern.

    Counts which of the three pairs and whether the triple reach threshold
    under measure, then reports one of two_pairs, all_pairs_no_triple,
    triple_only, triple_and_all_pairs or other.

    Raises:
        ArityError: If pattern does not have exactly three items.
    """
    pattern = make_pattern(pattern)
    if len(pattern) != 3:
        raise ArityError(f"case classification needs exactly 3 items, got {len(pattern)}")
    exact = resolve_measure(measure).exact
    pair_hits = sum(
        compare(evaluate_measure(db, measure, pair), ">=", threshold, exact=exact)
        for pair in combinations(pattern, 2)
    )
    triple_hit = compare(evaluate_measure(db, measure, pattern), ">=", threshold, exact=exact)

    if triple_hit and pair_hits == 3:
        return TRIPLE_AND_ALL_PAIRS
    if triple_hit and pair_hits == 0:
        return TRIPLE_ONLY
    if not triple_hit and pair_hits == 3:
        return ALL_PAIRS_NO_TRIPLE
    if not triple_hit and pair_hits == 2:
        return TWO_PAIRS
    return OTHER
