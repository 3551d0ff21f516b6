"""Decision and mixed-model maximization for adjacency-only hypergraphs."""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import networkx as nx

from core.assembly import Assembly, GenomeModel, Verdict, Walk
from core.errors import PreconditionViolated
from core.hypergraph import AssemblyHypergraph, Edge, Vertex, Weight, validate
from engines.base_engine import DecisionEngine, certify
from engines.capacity_graph import CapacityGraph, max_weight_capacitated_subgraph

logger = logging.getLogger(__name__)

ENGINE_NAME = "adjacency"

_TERMINAL = ("<terminal>",)


@dataclass(frozen=True)
class AdjacencyOptimum:
    kept: Tuple[Edge, ...]
    weight: Weight
    assembly: Assembly


def _require_adjacency_graph(h: AssemblyHypergraph) -> None:
    if not h.is_adjacency_graph():
        raise PreconditionViolated(
            [f"interval {e.describe()} present in an adjacency-only operation" for e in h.intervals]
        )


def _graph(h: AssemblyHypergraph) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(h.vertices)
    graph.add_edges_from(e.sorted_members() for e in h.adjacencies)
    return graph


def degree_violations(h: AssemblyHypergraph) -> List[str]:
    graph = _graph(h)
    return [
        f"{v} has {graph.degree(v)} neighbours but multiplicity {h.c(v)}"
        for v in h.vertices
        if graph.degree(v) > 2 * h.c(v)
    ]


def spare_capacity_violations(h: AssemblyHypergraph) -> List[str]:
    """Components whose spare capacity sum(2c(v) - deg(v)) is not positive."""
    graph = _graph(h)
    reasons = []
    for component in nx.connected_components(graph):
        spare = sum(2 * h.c(v) - graph.degree(v) for v in component)
        if spare <= 0:
            reasons.append(f"component {{{','.join(sorted(component))}}} has no spare capacity")
    return sorted(reasons)


def _component_walks(
    graph: nx.Graph,
    component: List[Vertex],
    multiplicity: Dict[Vertex, int],
    model: GenomeModel,
) -> Optional[List[Walk]]:
    if len(component) == 1 and graph.degree(component[0]) == 0:
        return [Walk.linear(component[0])]

    ends = {v: graph.degree(v) % 2 for v in component}
    if not any(ends.values()):
        opener = next((v for v in component if 2 * multiplicity[v] - graph.degree(v) >= 2), None)
        if opener is not None:
            ends[opener] = 2
        elif model is GenomeModel.LINEAR:
            return None
        else:
            circuit = [u for u, _ in nx.eulerian_circuit(graph.subgraph(component), source=component[0])]
            return [Walk.circular(*circuit)]

    walker = nx.MultiGraph()
    walker.add_nodes_from(component)
    walker.add_edges_from(graph.subgraph(component).edges())
    for vertex in component:
        for _ in range(ends[vertex]):
            walker.add_edge(_TERMINAL, vertex)

    walks, current = [], []
    for u, v in nx.eulerian_circuit(walker, source=_TERMINAL):
        if u == _TERMINAL:
            current = [v]
        elif v == _TERMINAL:
            walks.append(Walk.linear(*current))
        else:
            current.append(v)
    return walks


def extract_walks(h: AssemblyHypergraph, model: GenomeModel) -> Optional[Assembly]:
    """
    Build walks that realize every adjacency of ``h`` within its multiplicities.

    Every vertex v is an endpoint of deg(v) mod 2 walks, routed through a
    virtual terminal so Euler circuits split into trails. An all-even
    component is opened at its first vertex with two spare slots; the mixed
    model falls back to one circular walk when no such vertex exists.
    Returns None when the degree or spare-capacity conditions fail.
    """
    if degree_violations(h):
        return None
    graph = _graph(h)
    walks: List[Walk] = []
    components = sorted(sorted(c) for c in nx.connected_components(graph))
    for component in components:
        found = _component_walks(graph, component, h.multiplicity, model)
        if found is None:
            return None
        walks.extend(found)
    return Assembly(tuple(walks))


def decide_adjacency(h: AssemblyHypergraph, model: GenomeModel) -> Verdict:
    """
    Mixed: yes iff deg(v) <= 2c(v) everywhere. Linear: additionally every
    component has positive spare capacity.
    """
    validate(h)
    _require_adjacency_graph(h)

    reasons = degree_violations(h)
    if not reasons and model is GenomeModel.LINEAR:
        reasons = spare_capacity_violations(h)
    if reasons:
        logger.debug("Adjacency conditions fail: %s", "; ".join(reasons))
        return certify(Verdict.no(ENGINE_NAME, reasons), h, model)

    witness = extract_walks(h, model)
    return certify(Verdict.yes(witness, ENGINE_NAME), h, model)


def maximize_adjacencies_mixed(h: AssemblyHypergraph) -> AdjacencyOptimum:
    """Keep a maximum-weight adjacency subset that still has a mixed assembly."""
    validate(h)
    _require_adjacency_graph(h)

    selection = max_weight_capacitated_subgraph(CapacityGraph.from_hypergraph(h))
    by_ends = {e.sorted_members(): e for e in h.adjacencies}
    kept = tuple(by_ends[edge.ends] for edge in selection.edges)
    restricted = h.with_edges(kept)

    verdict = decide_adjacency(restricted, GenomeModel.MIXED)
    logger.info(
        "Kept %s of %s adjacencies, weight %s", len(kept), len(h.adjacencies), selection.weight
    )
    return AdjacencyOptimum(restricted.edges, selection.weight, verdict.witness)


class AdjacencyEngine(DecisionEngine):
    name = ENGINE_NAME

    def decide(self, h: AssemblyHypergraph, model: GenomeModel) -> Verdict:
        return decide_adjacency(h, model)

    def unsupported(self, h: AssemblyHypergraph) -> Tuple[str, ...]:
        return tuple(f"interval {e.describe()} present" for e in h.intervals)
