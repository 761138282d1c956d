"""
Item Hyper-Graph construction.

Vertices are the items of a pattern; hyperedges are sub-patterns carrying a
significant association, each annotated with the measure value behind it
and a polarity (negative edges mark rarity conditions).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional, Sequence, Tuple

from constraints.ast_nodes import Compare, Formula, MeasureCall, Variable, iter_nodes
from constraints.evaluator import edge_condition, satisfying_subpatterns
from database.transaction_db import TransactionDatabase, make_pattern
from measures.registry import evaluate_measure, resolve_measure
from miners.results import BicliquePattern, FoundPattern, IndirectAssociation, StarPattern
from utils.logger import MiningLogger

POSITIVE = "positive"
NEGATIVE = "negative"

# "a < b" with the measure on the left, or "b > a" with it on the right
_RARITY = {("left", "<"), ("right", ">")}


@dataclass(frozen=True)
class Hyperedge:
    items: Tuple[str, ...]
    measure: str
    value: Optional[float]
    polarity: str = POSITIVE

    def sort_key(self):
        return (len(self.items), self.items, self.measure, self.polarity, self.value is None, self.value or 0.0)


@dataclass(frozen=True)
class ItemHyperGraph:
    """Hypergraph over item labels; build through ItemHyperGraph.create."""

    vertices: Tuple[str, ...]
    hyperedges: Tuple[Hyperedge, ...]

    def __post_init__(self):
        known = set(self.vertices)
        for edge in self.hyperedges:
            if not edge.items:
                raise ValueError("hyperedges need at least one item")
            if not set(edge.items) <= known:
                raise ValueError(f"hyperedge {edge.items} uses items outside the vertex set")
        if len(set(self.hyperedges)) != len(self.hyperedges):
            raise ValueError("hyperedges must be unique")

    @classmethod
    def create(cls, vertices: Iterable[str], hyperedges: Iterable[Hyperedge]) -> "ItemHyperGraph":
        """Canonicalise: sorted vertices, sorted edge members, sorted unique edges."""
        edges = {
            Hyperedge(tuple(sorted(edge.items)), edge.measure, edge.value, edge.polarity)
            for edge in hyperedges
        }
        return cls(tuple(sorted(set(vertices))), tuple(sorted(edges, key=Hyperedge.sort_key)))


def _edge(db: TransactionDatabase, pattern: Sequence[int], measure: str, polarity: str) -> Hyperedge:
    value = evaluate_measure(db, measure, make_pattern(pattern))
    return Hyperedge(db.labels_of(make_pattern(pattern)), resolve_measure(measure).name, value.value, polarity)


def edge_measure(ast: Formula) -> Tuple[str, str]:
    """
    Measure name and polarity for edges generated by a constraint.

    Taken from the first comparison applying a measure to the sub-pattern
    variable alone; support and positive polarity when there is none.
    """
    condition = edge_condition(ast)
    target = (Variable(condition.variable),)
    for node in iter_nodes(condition.body):
        if not isinstance(node, Compare):
            continue
        for side, term in (("left", node.left), ("right", node.right)):
            if isinstance(term, MeasureCall) and term.args == target:
                polarity = NEGATIVE if (side, node.op) in _RARITY else POSITIVE
                return resolve_measure(term.measure).name, polarity
    return "support", POSITIVE


def build_ihg(
    db: TransactionDatabase,
    pattern: Sequence[int],
    edge_constraint: Formula,
    cap: Optional[int] = None,
) -> ItemHyperGraph:
    """Hypergraph whose edges are the sub-patterns satisfying edge_constraint."""
    pattern = make_pattern(pattern)
    measure, polarity = edge_measure(edge_constraint)
    edges = [
        _edge(db, sub, measure, polarity)
        for sub in satisfying_subpatterns(db, edge_constraint, pattern, cap)
    ]
    MiningLogger.get_logger(__name__).debug(f"built hypergraph with {len(edges)} hyperedges")
    return ItemHyperGraph.create(db.labels_of(pattern), edges)


def ihg_from_indirect(db: TransactionDatabase, assoc: IndirectAssociation) -> ItemHyperGraph:
    """
    Negative pair edge plus the two positive leaf-mediator edges.

    Mediator edges carry the dependence measure evaluated on their own items,
    so lift stands in for the two-argument d.
    """
    measure = "lift" if assoc.dependence_measure == "d" else assoc.dependence_measure
    edges = [_edge(db, (assoc.a, assoc.b), "support", NEGATIVE)]
    edges += [_edge(db, (item_id,) + assoc.mediator, measure, POSITIVE) for item_id in (assoc.a, assoc.b)]
    return ItemHyperGraph.create(db.labels_of((assoc.a, assoc.b) + assoc.mediator), edges)


def ihg_from_star(db: TransactionDatabase, star: StarPattern) -> ItemHyperGraph:
    """Negative edges between leaves, positive leaf-center edges."""
    edges = [_edge(db, pair, "support", NEGATIVE) for pair in combinations(star.leaves, 2)]
    edges += [_edge(db, (leaf,) + star.center, "support", POSITIVE) for leaf in star.leaves]
    return ItemHyperGraph.create(db.labels_of(star.center + star.leaves), edges)


def ihg_from_clique(db: TransactionDatabase, found: FoundPattern) -> ItemHyperGraph:
    """One positive edge per item pair of the clique."""
    edges = [_edge(db, pair, "support", POSITIVE) for pair in combinations(found.pattern, 2)]
    return ItemHyperGraph.create(db.labels_of(found.pattern), edges)


def ihg_from_biclique(db: TransactionDatabase, biclique: BicliquePattern) -> ItemHyperGraph:
    """Positive cross-side edges, negative within-side edges."""
    edges = [_edge(db, (w, v), "support", POSITIVE) for w in biclique.w for v in biclique.v]
    for side in (biclique.w, biclique.v):
        edges += [_edge(db, pair, "support", NEGATIVE) for pair in combinations(side, 2)]
    return ItemHyperGraph.create(db.labels_of(biclique.w + biclique.v), edges)
