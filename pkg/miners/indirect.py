"""
Indirect association and star pattern mining.

Both start from the same table: for every mediator M (a frequent pattern at
t_f, up to max_mediator_len items) the leaves are the items x outside M with
support({x} u M) >= t_f and d({x}, M) >= t_d. Indirect associations are the
rare leaf pairs; star patterns are the maximal mutually rare leaf sets.
"""

from __future__ import annotations

import time
from itertools import combinations
from typing import Dict, List, Tuple

import networkx as nx

from database.transaction_db import Pattern, TransactionDatabase, below_threshold, meets_threshold
from measures.registry import MeasureValue, compare, dependence, evaluate_measure, resolve_measure
from miners.frequent import frequent_tidsets
from miners.params import MiningParams
from miners.results import IndirectAssociation, StarPattern
from utils.logger import MiningLogger

logger = MiningLogger.get_logger(__name__)

Leaf = Tuple[int, int, MeasureValue]  # item id, count of {item} u M, d({item}, M)


def dependence_value(db: TransactionDatabase, measure: str, left: Pattern, right: Pattern) -> MeasureValue:
    """
    d(P, Q) under the configured measure.

    Two-argument measures (lift, d) get P and Q directly; single-pattern
    measures are applied to P u Q.
    """
    definition = resolve_measure(measure)
    if definition.name in ("d", "lift"):
        return dependence(db, left, right)
    return evaluate_measure(db, definition.name, tuple(sorted(left + right)))


def mediator_leaves(db: TransactionDatabase, params: MiningParams) -> Dict[Pattern, List[Leaf]]:
    """Mediators mapped to the leaves meeting both mediator conditions."""
    params.validate()
    exact = resolve_measure(params.dependence_measure).exact
    table: Dict[Pattern, List[Leaf]] = {}
    for mediator, mediator_bits in sorted(frequent_tidsets(db, params.t_f, params.max_mediator_len).items()):
        leaves: List[Leaf] = []
        for item_id, item_bits in enumerate(db.item_tidsets):
            if item_id in mediator:
                continue
            count = bin(mediator_bits & item_bits).count("1")
            if not meets_threshold(count, db.n, params.t_f):
                continue
            value = dependence_value(db, params.dependence_measure, (item_id,), mediator)
            if compare(value, ">=", params.t_d, exact=exact):
                leaves.append((item_id, count, value))
        if leaves:
            table[mediator] = leaves
    return table


def _is_rare_pair(db: TransactionDatabase, a: int, b: int, t_s) -> bool:
    return below_threshold(db.support_count((a, b)), db.n, t_s)


def mine_indirect(db: TransactionDatabase, params: MiningParams) -> List[IndirectAssociation]:
    """
    All (a, b, M) with support({a,b}) < t_s, support({a} u M) >= t_f,
    support({b} u M) >= t_f, d({a}, M) >= t_d and d({b}, M) >= t_d,
    sorted by (a, b, M).
    """
    started = time.perf_counter()
    results = []
    for mediator, leaves in mediator_leaves(db, params).items():
        for (a, count_a, dep_a), (b, count_b, dep_b) in combinations(leaves, 2):
            if not _is_rare_pair(db, a, b, params.t_s):
                continue
            results.append(IndirectAssociation(
                a=a,
                b=b,
                mediator=mediator,
                pair_count=db.support_count((a, b)),
                mediator_counts=(count_a, count_b),
                dependences=(dep_a, dep_b),
                n=db.n,
                dependence_measure=resolve_measure(params.dependence_measure).name,
            ))
    results.sort(key=lambda assoc: assoc.key)
    MiningLogger.log_mining_run("indirect", db.n, len(results), time.perf_counter() - started)
    return results


def mine_star(db: TransactionDatabase, params: MiningParams) -> List[StarPattern]:
    """
    Maximal leaf sets of two or more items, all pairwise rare, around a
    common mediator center.
    """
    started = time.perf_counter()
    results = []
    for mediator, leaves in mediator_leaves(db, params).items():
        rare = nx.Graph()
        rare.add_nodes_from(item_id for item_id, _, _ in leaves)
        rare.add_edges_from(
            (a, b) for (a, _, _), (b, _, _) in combinations(leaves, 2)
            if _is_rare_pair(db, a, b, params.t_s)
        )
        if rare.number_of_edges() == 0:
            continue
        for clique in nx.find_cliques(rare):
            if len(clique) >= 2:
                results.append(StarPattern(mediator, tuple(sorted(clique)), db.support_count(mediator), db.n))
    results.sort(key=lambda star: (star.center, star.leaves))
    logger.debug(f"star mining produced {len(results)} stars")
    MiningLogger.log_mining_run("star", db.n, len(results), time.perf_counter() - started)
    return results
