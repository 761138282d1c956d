"""
Item Hyper-Graph serialization: JSON and Graphviz DOT.

DOT has no hyperedges, so an edge over three or more items is drawn as a
point-shaped junction node joined to each member. Single-item edges are
shown as double-bordered vertices.
"""

from __future__ import annotations

import json
from typing import Dict, List

import pydot

from hypergraph.item_hypergraph import NEGATIVE, Hyperedge, ItemHyperGraph


def to_dict(ihg: ItemHyperGraph) -> Dict[str, object]:
    return {
        "vertices": list(ihg.vertices),
        "hyperedges": [
            {
                "items": list(edge.items),
                "measure": edge.measure,
                "value": edge.value,
                "polarity": edge.polarity,
            }
            for edge in ihg.hyperedges
        ],
    }


def export_json(ihg: ItemHyperGraph) -> str:
    """Compact JSON with sorted arrays; identical graphs give identical text."""
    return json.dumps(to_dict(ihg), separators=(",", ":"))


def load_json(text: str) -> ItemHyperGraph:
    """Parse export_json output back into a graph."""
    data = json.loads(text)
    edges = [
        Hyperedge(tuple(edge["items"]), edge["measure"], edge["value"], edge["polarity"])
        for edge in data["hyperedges"]
    ]
    return ItemHyperGraph.create(data["vertices"], edges)


def to_pydot(ihg: ItemHyperGraph, name: str = "ihg") -> pydot.Dot:
    graph = pydot.Dot(name, graph_type="graph")
    node_ids = {label: f"v{index}" for index, label in enumerate(ihg.vertices)}
    singletons = {edge.items[0] for edge in ihg.hyperedges if len(edge.items) == 1}

    for label in ihg.vertices:
        attrs = {"label": json.dumps(label, ensure_ascii=False)}
        if label in singletons:
            attrs["peripheries"] = "2"
        graph.add_node(pydot.Node(node_ids[label], **attrs))

    junctions = 0
    for edge in ihg.hyperedges:
        style = {"style": "dashed"} if edge.polarity == NEGATIVE else {}
        if len(edge.items) == 2:
            a, b = (node_ids[label] for label in edge.items)
            graph.add_edge(pydot.Edge(a, b, **style))
        elif len(edge.items) >= 3:
            junction = f"e{junctions}"
            junctions += 1
            graph.add_node(pydot.Node(junction, shape="point", label=json.dumps("")))
            for label in edge.items:
                graph.add_edge(pydot.Edge(junction, node_ids[label], **style))
    return graph


def export_dot(ihg: ItemHyperGraph) -> str:
    """Graphviz text, deterministic for a given graph."""
    return to_pydot(ihg).to_string()


def export_many_dot(graphs: List[ItemHyperGraph]) -> str:
    return "".join(to_pydot(ihg, f"ihg{index}").to_string() for index, ihg in enumerate(graphs))
