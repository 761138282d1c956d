"""
Frequent, closed and maximal pattern mining.

Levelwise Apriori over vertical tidsets: candidates of length k+1 are joined
from frequent k-patterns sharing a k-1 prefix, pruned by the anti-monotone
property, and counted by intersecting tidset bitsets.
"""

from __future__ import annotations

import time
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from database.transaction_db import (
    Pattern,
    TransactionDatabase,
    as_fraction,
    make_pattern,
    meets_threshold,
    nonempty_subsets,
)
from errors import MiningParameterError
from miners.results import CLOSED, FREQUENT, MAXIMAL, FoundPattern
from utils.logger import MiningLogger

logger = MiningLogger.get_logger(__name__)


def join_level(level: Iterable[Pattern]) -> List[Pattern]:
    """
    Apriori candidate generation.

    Joins patterns that share all but their last item and keeps a candidate
    only if every one of its k-subsets is in level.
    """
    patterns = sorted(level)
    present = set(patterns)
    candidates = []
    for i, left in enumerate(patterns):
        for right in patterns[i + 1:]:
            if left[:-1] != right[:-1]:
                break
            candidate = left + right[-1:]
            if all(sub in present for sub in combinations(candidate, len(candidate) - 1)):
                candidates.append(candidate)
    return candidates


def frequent_tidsets(
    db: TransactionDatabase,
    minisupport,
    max_len: Optional[int] = None,
) -> Dict[Pattern, int]:
    """
    Every pattern of length <= max_len whose support reaches minisupport,
    mapped to its tidset bits.

    Raises:
        MiningParameterError: If minisupport is not positive.
    """
    if as_fraction(minisupport) <= 0:
        raise MiningParameterError("minisupport must be greater than 0")
    if db.n == 0 or (max_len is not None and max_len < 1):
        return {}

    level: Dict[Pattern, int] = {
        (item_id,): bits
        for item_id, bits in enumerate(db.item_tidsets)
        if meets_threshold(bin(bits).count("1"), db.n, minisupport)
    }
    found = dict(level)
    k = 1
    while level and (max_len is None or k < max_len):
        next_level: Dict[Pattern, int] = {}
        for candidate in join_level(level):
            bits = level[candidate[:-1]] & level[candidate[:-2] + candidate[-1:]]
            if meets_threshold(bin(bits).count("1"), db.n, minisupport):
                next_level[candidate] = bits
        k += 1
        logger.debug(f"level {k}: {len(next_level)} frequent patterns")
        found.update(next_level)
        level = next_level
    return found


def _canonical(patterns: Iterable[FoundPattern]) -> List[FoundPattern]:
    return sorted(patterns, key=lambda found: (len(found.pattern), found.pattern))


def mine_frequent(db: TransactionDatabase, minisupport, max_len: Optional[int] = None) -> List[FoundPattern]:
    """
    All patterns with support >= minisupport and length <= max_len,
    sorted by (length, items).
    """
    started = time.perf_counter()
    results = _canonical(
        FoundPattern(pattern, FREQUENT, bin(bits).count("1"), db.n)
        for pattern, bits in frequent_tidsets(db, minisupport, max_len).items()
    )
    MiningLogger.log_mining_run(FREQUENT, db.n, len(results), time.perf_counter() - started)
    return results


def _closure_of_bits(db: TransactionDatabase, bits: int) -> Pattern:
    return tuple(item_id for item_id, item_bits in enumerate(db.item_tidsets) if bits & item_bits == bits)


def mine_closed(db: TransactionDatabase, minisupport) -> List[FoundPattern]:
    """Frequent patterns that equal their own closure."""
    started = time.perf_counter()
    results = _canonical(
        FoundPattern(pattern, CLOSED, bin(bits).count("1"), db.n)
        for pattern, bits in frequent_tidsets(db, minisupport).items()
        if _closure_of_bits(db, bits) == pattern
    )
    MiningLogger.log_mining_run(CLOSED, db.n, len(results), time.perf_counter() - started)
    return results


def mine_maximal(db: TransactionDatabase, minisupport) -> List[FoundPattern]:
    """Frequent patterns with no frequent proper superset."""
    started = time.perf_counter()
    frequent = frequent_tidsets(db, minisupport)
    covered = set()
    for pattern in frequent:
        if len(pattern) > 1:
            covered.update(combinations(pattern, len(pattern) - 1))
    results = _canonical(
        FoundPattern(pattern, MAXIMAL, bin(bits).count("1"), db.n)
        for pattern, bits in frequent.items()
        if pattern not in covered
    )
    MiningLogger.log_mining_run(MAXIMAL, db.n, len(results), time.perf_counter() - started)
    return results


def reconstruct_support(closed: Sequence[FoundPattern], pattern: Sequence[int]) -> Optional[Fraction]:
    """
    Support of pattern recovered from closed patterns alone: the largest
    support among closed supersets, or None when there is none.
    """
    target = set(pattern)
    supports = [found.support for found in closed if target <= set(found.pattern)]
    return max(supports) if supports else None


def compression_contributors(
    db: TransactionDatabase,
    closed: Sequence[FoundPattern],
) -> List[Tuple[FoundPattern, int]]:
    """
    Closed patterns that stand in for at least one proper sub-pattern with
    the same support, paired with how many such sub-patterns there are.
    """
    contributors = []
    for found in closed:
        shared = sum(
            1 for sub in nonempty_subsets(found.pattern)
            if len(sub) < len(found.pattern) and db.support_count(sub) == found.support_count
        )
        if shared:
            contributors.append((found, shared))
    return contributors
