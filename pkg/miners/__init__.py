"""Pattern miners package for the Higher-Order Pattern Miner."""

from .correlation import mine_all_correlation, mine_unexpected_correlation
from .frequent import (
    compression_contributors,
    frequent_tidsets,
    mine_closed,
    mine_frequent,
    mine_maximal,
    reconstruct_support,
)
from .graph_patterns import frequent_pair_graph, mine_biclique, mine_clique
from .indirect import mediator_leaves, mine_indirect, mine_star
from .params import MiningParams
from .results import BicliquePattern, FoundPattern, IndirectAssociation, StarPattern

__all__ = [
    "BicliquePattern",
    "FoundPattern",
    "IndirectAssociation",
    "MiningParams",
    "StarPattern",
    "compression_contributors",
    "frequent_pair_graph",
    "frequent_tidsets",
    "mediator_leaves",
    "mine_all_correlation",
    "mine_biclique",
    "mine_clique",
    "mine_closed",
    "mine_frequent",
    "mine_indirect",
    "mine_maximal",
    "mine_star",
    "mine_unexpected_correlation",
    "reconstruct_support",
]
