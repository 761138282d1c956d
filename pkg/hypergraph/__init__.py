"""Item Hyper-Graph package for the Higher-Order Pattern Miner."""

from .export import export_dot, export_json, export_many_dot, load_json, to_dict
from .item_hypergraph import (
    NEGATIVE,
    POSITIVE,
    Hyperedge,
    ItemHyperGraph,
    build_ihg,
    edge_measure,
    ihg_from_biclique,
    ihg_from_clique,
    ihg_from_indirect,
    ihg_from_star,
)

__all__ = [
    "NEGATIVE",
    "POSITIVE",
    "Hyperedge",
    "ItemHyperGraph",
    "build_ihg",
    "edge_measure",
    "export_dot",
    "export_json",
    "export_many_dot",
    "ihg_from_biclique",
    "ihg_from_clique",
    "ihg_from_indirect",
    "ihg_from_star",
    "load_json",
    "to_dict",
]
