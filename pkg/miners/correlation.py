"""
All-correlation and unexpected-correlation pattern mining under lift.

Lift is undefined on single items, so the sub-pattern conditions only look
at sub-patterns of two or more items.
"""

from __future__ import annotations

import time
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional

from config import Config
from database.transaction_db import Pattern, TransactionDatabase, as_fraction
from errors import MiningParameterError
from measures.registry import MeasureValue, compare, lift
from miners.frequent import frequent_tidsets, join_level
from miners.results import ALL_CORRELATION, UNEXPECTED_CORRELATION, FoundPattern
from utils.logger import MiningLogger

logger = MiningLogger.get_logger(__name__)


def _check_threshold(min_correlation) -> None:
    if as_fraction(min_correlation) <= 0:
        raise MiningParameterError("min_correlation must be greater than 0")


def _found(db: TransactionDatabase, pattern: Pattern, kind: str, value: MeasureValue) -> FoundPattern:
    return FoundPattern(pattern, kind, db.support_count(pattern), db.n, {"lift": value})


def mine_all_correlation(
    db: TransactionDatabase,
    min_correlation,
    max_len: Optional[int] = None,
) -> List[FoundPattern]:
    """
    Patterns of 2..max_len items all of whose sub-patterns with two or
    more items have lift >= min_correlation.

    The constraint is anti-monotone, so candidates are grown levelwise
    from qualifying pairs and pruned like Apriori.
    """
    _check_threshold(min_correlation)
    max_len = Config.DEFAULT_MAX_LEN if max_len is None else max_len
    started = time.perf_counter()
    results: List[FoundPattern] = []
    if db.n == 0 or max_len < 2:
        return results

    candidates = [
        pair for pair in combinations(range(db.m), 2)
        if db.item_tidsets[pair[0]] and db.item_tidsets[pair[1]]
    ]
    size = 2
    while candidates and size <= max_len:
        level: Dict[Pattern, MeasureValue] = {}
        for candidate in candidates:
            value = lift(db, candidate)
            if compare(value, ">=", min_correlation):
                level[candidate] = value
        logger.debug(f"level {size}: {len(level)} all-correlation patterns")
        results.extend(_found(db, pattern, ALL_CORRELATION, value) for pattern, value in sorted(level.items()))
        candidates = join_level(level)
        size += 1

    MiningLogger.log_mining_run(ALL_CORRELATION, db.n, len(results), time.perf_counter() - started)
    return results


def mine_unexpected_correlation(
    db: TransactionDatabase,
    min_correlation,
    max_len: Optional[int] = None,
    include_pairs: bool = False,
) -> List[FoundPattern]:
    """
    Patterns with lift >= min_correlation whose proper sub-patterns of two
    or more items all have lift < min_correlation.

    Patterns have at least 3 items unless include_pairs is set. The
    constraint is not anti-monotone, so every occurring pattern up to
    max_len is examined; a pattern with support 0 has lift 0 and cannot
    qualify, which bounds the search to patterns seen in some transaction.
    """
    _check_threshold(min_correlation)
    max_len = Config.DEFAULT_MAX_LEN if max_len is None else max_len
    min_len = 2 if include_pairs else 3
    started = time.perf_counter()
    results: List[FoundPattern] = []
    if db.n == 0 or max_len < min_len:
        return results

    lifts: Dict[Pattern, MeasureValue] = {}

    def lift_of(pattern: Pattern) -> MeasureValue:
        if pattern not in lifts:
            lifts[pattern] = lift(db, pattern)
        return lifts[pattern]

    occurring = frequent_tidsets(db, Fraction(1, db.n), max_len)
    for pattern in sorted(occurring, key=lambda p: (len(p), p)):
        if len(pattern) < min_len:
            continue
        value = lift_of(pattern)
        if not compare(value, ">=", min_correlation):
            continue
        if all(
            compare(lift_of(sub), "<", min_correlation)
            for size in range(2, len(pattern))
            for sub in combinations(pattern, size)
        ):
            results.append(_found(db, pattern, UNEXPECTED_CORRELATION, value))

    MiningLogger.log_mining_run(UNEXPECTED_CORRELATION, db.n, len(results), time.perf_counter() - started)
    return results
