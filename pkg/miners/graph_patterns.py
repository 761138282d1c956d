"""
Clique and bi-clique pattern mining over the frequent-pair graph.

The frequent-pair graph has the items reaching minisupport as vertices and
an edge for every frequent item pair. Clique patterns are its maximal
cliques. Bi-clique patterns are its maximal complete bipartite pieces with
independent sides, found as maximal cliques of a doubled graph.
"""

from __future__ import annotations

import time
from itertools import combinations, product
from typing import List, Sequence

import networkx as nx

from database.transaction_db import TransactionDatabase, as_fraction, meets_threshold
from errors import MiningParameterError
from measures.registry import MeasureValue
from miners.results import CLIQUE, BicliquePattern, FoundPattern
from utils.logger import MiningLogger

logger = MiningLogger.get_logger(__name__)


def frequent_pair_graph(db: TransactionDatabase, minisupport) -> nx.Graph:
    """Items with support >= minisupport, joined when their pair is frequent."""
    if as_fraction(minisupport) <= 0:
        raise MiningParameterError("minisupport must be greater than 0")
    graph = nx.Graph()
    if db.n == 0:
        return graph
    graph.add_nodes_from(
        item_id for item_id, bits in enumerate(db.item_tidsets)
        if meets_threshold(bin(bits).count("1"), db.n, minisupport)
    )
    for a, b in combinations(sorted(graph.nodes), 2):
        count = bin(db.item_tidsets[a] & db.item_tidsets[b]).count("1")
        if meets_threshold(count, db.n, minisupport):
            graph.add_edge(a, b, count=count)
    logger.debug(f"frequent-pair graph: {graph.number_of_nodes()} items, {graph.number_of_edges()} pairs")
    return graph


def mine_clique(db: TransactionDatabase, minisupport) -> List[FoundPattern]:
    """
    Maximal clique patterns: item sets whose every pair is frequent.

    The whole pattern need not be frequent; its own support and the
    smallest pair support are attached.
    """
    started = time.perf_counter()
    graph = frequent_pair_graph(db, minisupport)
    results = []
    for clique in nx.find_cliques(graph):
        pattern = tuple(sorted(clique))
        pair_counts = [graph.edges[a, b]["count"] for a, b in combinations(pattern, 2)]
        min_pair = (
            MeasureValue.undefined() if not pair_counts
            else MeasureValue(as_fraction(min(pair_counts)) / db.n)
        )
        results.append(FoundPattern(
            pattern, CLIQUE, db.support_count(pattern), db.n, {"min_pair_support": min_pair}
        ))
    results.sort(key=lambda found: (len(found.pattern), found.pattern))
    MiningLogger.log_mining_run(CLIQUE, db.n, len(results), time.perf_counter() - started)
    return results


def _side_labels(db: TransactionDatabase, side: Sequence[int]) -> List[str]:
    return sorted(db.labels_of(side))


def mine_biclique(db: TransactionDatabase, minisupport, min_side: int = 2) -> List[BicliquePattern]:
    """
    Maximal bi-clique patterns (W, V): disjoint sides of at least min_side
    items, every cross pair frequent, every within-side pair infrequent.

    Each item appears twice in an auxiliary graph, once per side. Same-side
    copies are joined when the pair is infrequent, opposite-side copies when
    it is frequent, and an item's two copies are never joined. Cliques of
    that graph are exactly the bi-cliques, so maximal cliques give the
    maximal bi-cliques (each found once per side assignment).
    """
    if min_side < 1:
        raise MiningParameterError("min_side must be at least 1")
    started = time.perf_counter()
    pairs = frequent_pair_graph(db, minisupport)
    items = range(db.m) if db.n else range(0)

    doubled = nx.Graph()
    doubled.add_nodes_from(product(items, (0, 1)))
    for a, b in combinations(items, 2):
        if pairs.has_edge(a, b):
            doubled.add_edge((a, 0), (b, 1))
            doubled.add_edge((a, 1), (b, 0))
        else:
            doubled.add_edge((a, 0), (b, 0))
            doubled.add_edge((a, 1), (b, 1))

    found = {}
    for clique in nx.find_cliques(doubled):
        w = tuple(sorted(item for item, side in clique if side == 0))
        v = tuple(sorted(item for item, side in clique if side == 1))
        if len(w) < min_side or len(v) < min_side:
            continue
        w, v = sorted((w, v), key=lambda side: _side_labels(db, side))
        if (w, v) not in found:
            min_cross = min(pairs.edges[a, b]["count"] for a in w for b in v)
            found[(w, v)] = BicliquePattern(w, v, db.support_count(w + v), min_cross, db.n)

    results = sorted(found.values(), key=lambda pattern: (_side_labels(db, pattern.w), _side_labels(db, pattern.v)))
    MiningLogger.log_mining_run("biclique", db.n, len(results), time.perf_counter() - started)
    return results
