"""
Maximum-weight triple selection by contraction to an adjacency problem.

Forced triples are kept outright. Every other one-repeat triple {v0, r, v1}
is contracted into a labeled D-edge v0-v1 that replaces the adjacencies
{v0, r} and {r, v1}; the surviving adjacencies are reweighted so the
capacitated subgraph solver never trades one of them for D-edges. Retained
D-edges are lifted back into walks v0.r.v1.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple, Union

import networkx as nx

from core.assembly import Assembly, GenomeModel
from core.compatibility import is_compatible
from core.errors import PreconditionViolated
from core.hypergraph import (
    AssemblyHypergraph,
    Edge,
    Vertex,
    Weight,
    fresh_vertex,
    induced_adjacency_graph,
    repeat_clusters,
    validate,
)
from engines.adjacency import decide_adjacency, extract_walks
from engines.capacity_graph import CapacityEdge, CapacityGraph, max_weight_capacitated_subgraph
from engines.triples_settings import TriplesSettings

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RejectedTriple:
    edge: Edge
    reason: str

    def describe(self) -> str:
        return f"{self.edge.describe()}: {self.reason}"


@dataclass(frozen=True)
class TripleClassification:
    forced_repeat_free: Tuple[Edge, ...] = ()
    forced_adjacent_pair: Tuple[Edge, ...] = ()
    forced_two_repeat: Tuple[Edge, ...] = ()
    contractible: Tuple[Edge, ...] = ()
    rejected: Tuple[RejectedTriple, ...] = ()

    @property
    def forced(self) -> Tuple[Edge, ...]:
        return self.forced_repeat_free + self.forced_adjacent_pair + self.forced_two_repeat


@dataclass(frozen=True)
class ContractionLedger:
    """D-edges with their triples, removed adjacencies, and reweighted survivors."""

    d_edges: Tuple[CapacityEdge, ...] = ()
    triples: Mapping[str, Edge] = field(default_factory=dict)
    removed: FrozenSet[FrozenSet[Vertex]] = frozenset()
    reweighted: Mapping[FrozenSet[Vertex], Weight] = field(default_factory=dict)

    def repeat_of(self, label: str, repeats: FrozenSet[Vertex]) -> Vertex:
        (repeat,) = self.triples[label].members & repeats
        return repeat


@dataclass(frozen=True)
class TripleOptimum:
    selected: Tuple[Edge, ...]
    weight: Weight
    assembly: Assembly
    classification: TripleClassification
    ledger: ContractionLedger
    dropped: Tuple[Edge, ...] = ()


def triple_compatible(e: Union[Edge, Iterable[Vertex]], h_a: AssemblyHypergraph) -> bool:
    """True iff the adjacencies inside ``e`` connect all three of its vertices."""
    members = e.members if isinstance(e, Edge) else frozenset(e)
    graph = nx.Graph()
    graph.add_nodes_from(members)
    graph.add_edges_from(a.sorted_members() for a in h_a.adjacencies if a.members <= members)
    return len(members) == 3 and nx.is_connected(graph)


def classify(h: AssemblyHypergraph, strict: Optional[bool] = None) -> TripleClassification:
    """
    Sort the intervals of ``h`` into forced, contractible and rejected triples.

    :param strict: raise PreconditionViolated when anything is rejected;
        defaults to MC1P_TRIPLES_STRICT.
    """
    validate(h)
    strict = TriplesSettings().strict if strict is None else strict
    h_a = induced_adjacency_graph(h)
    adjacent = {a.members for a in h.adjacencies}
    # clusters of the adjacency graph: a two-repeat triple would join its own repeats
    singleton_clusters = all(len(cluster) == 1 for cluster in repeat_clusters(h_a))

    buckets: Dict[str, List[Edge]] = {
        "repeat_free": [], "adjacent_pair": [], "two_repeat": [], "contractible": []
    }
    rejected: List[RejectedTriple] = []
    for edge in h.intervals:
        repeats = edge.members & h.repeats
        if edge.size != 3:
            rejected.append(RejectedTriple(edge, f"interval of size {edge.size} is not a triple"))
        elif edge.is_ordered:
            rejected.append(RejectedTriple(edge, "ordered triple"))
        elif not triple_compatible(edge, h_a):
            rejected.append(RejectedTriple(edge, "not compatible with the adjacency graph"))
        elif not repeats:
            buckets["repeat_free"].append(edge)
        elif len(repeats) == 1:
            pair = edge.members - repeats
            buckets["adjacent_pair" if pair in adjacent else "contractible"].append(edge)
        elif len(repeats) == 2 and singleton_clusters:
            buckets["two_repeat"].append(edge)
        elif len(repeats) == 2:
            rejected.append(RejectedTriple(edge, "two repeats while some repeat cluster is larger than one"))
        else:
            rejected.append(RejectedTriple(edge, "three repeats"))

    if strict and rejected:
        raise PreconditionViolated([r.describe() for r in rejected])
    for item in rejected:
        logger.debug("Triple rejected %s", item.describe())
    return TripleClassification(
        tuple(buckets["repeat_free"]),
        tuple(buckets["adjacent_pair"]),
        tuple(buckets["two_repeat"]),
        tuple(buckets["contractible"]),
        tuple(rejected),
    )


def contract(h: AssemblyHypergraph, contractible: Iterable[Edge]) -> ContractionLedger:
    """Replace each contractible triple by a labeled D-edge and reweight the survivors."""
    d_edges: List[CapacityEdge] = []
    triples: Dict[str, Edge] = {}
    removed = set()
    for edge in contractible:
        (repeat,) = edge.members & h.repeats
        v0, v1 = sorted(edge.members - {repeat})
        label = fresh_vertex(edge.describe(), triples)
        triples[label] = edge
        d_edges.append(CapacityEdge(v0, v1, edge.weight, label))
        removed.update((frozenset((v0, repeat)), frozenset((v1, repeat))))

    bonus = 1 + sum((d.weight for d in d_edges if d.weight > 0), 0)
    reweighted = {a.members: bonus for a in h.adjacencies if a.members not in removed}
    return ContractionLedger(tuple(d_edges), triples, frozenset(removed), reweighted)


def _lift(
    h: AssemblyHypergraph,
    ledger: ContractionLedger,
    retained: Iterable[str],
) -> Optional[Assembly]:
    """Walks realizing every adjacency plus the retained triples as v0.r.v1, or None."""
    repeats = h.repeats
    multiplicity = dict(h.multiplicity)
    taken = set(h.vertices)
    decode: Dict[Vertex, Vertex] = {}
    covered = set()
    paths = []
    for label in retained:
        d_edge = next(d for d in ledger.d_edges if d.label == label)
        repeat = ledger.repeat_of(label, repeats)
        occurrence = fresh_vertex(f"{repeat}@{len(decode) + 1}", taken)
        taken.add(occurrence)
        decode[occurrence] = repeat
        multiplicity[occurrence] = 1
        multiplicity[repeat] -= 1
        paths.extend((Edge.adjacency(d_edge.u, occurrence), Edge.adjacency(occurrence, d_edge.v)))
        covered.update((frozenset((d_edge.u, repeat)), frozenset((d_edge.v, repeat))))

    edges = [a for a in h.adjacencies if a.members not in covered] + paths
    touched = {v for e in edges for v in e.members}
    for vertex, mult in list(multiplicity.items()):
        if mult < 1:
            if vertex in touched:
                logger.debug("Lift needs %s more often than its multiplicity allows", vertex)
                return None
            del multiplicity[vertex]

    walks = extract_walks(AssemblyHypergraph(multiplicity, tuple(edges)), GenomeModel.MIXED)
    if walks is None:
        return None
    return walks.decode(decode)


def maximize_triples(h: AssemblyHypergraph, strict: Optional[bool] = None) -> TripleOptimum:
    """
    Select forced triples plus a maximum-weight set of contractible triples.

    The lifted assembly is checked against the adjacencies and the selected
    triples. When a shared repeat runs out of copies, retained contractible
    triples are dropped, lowest weight first, until the assembly validates.
    """
    validate(h)
    h_a = induced_adjacency_graph(h)
    base = decide_adjacency(h_a, GenomeModel.MIXED)
    if not base.is_yes:
        raise PreconditionViolated(["the adjacency graph has no mixed assembly"] + list(base.notes))

    classification = classify(h, strict)
    ledger = contract(h, classification.contractible)

    survivors = [
        CapacityEdge(*sorted(members), weight=weight) for members, weight in ledger.reweighted.items()
    ]
    graph = CapacityGraph({v: 2 * h.c(v) for v in h.vertices}, tuple(survivors) + ledger.d_edges)
    selection = max_weight_capacitated_subgraph(graph, priority=lambda e: (e.label, e.u, e.v))
    if sum(1 for e in selection.edges if not e.label) != len(survivors):
        logger.warning("Solver dropped a surviving adjacency; it is restored in the lift")
    retained = sorted(e.label for e in selection.edges if e.label)

    dropped: List[Edge] = []
    while True:
        assembly = _lift(h, ledger, retained)
        chosen = classification.forced + tuple(ledger.triples[label] for label in retained)
        target = h.with_edges(h.adjacencies + chosen)
        if assembly is not None and is_compatible(assembly, target, GenomeModel.MIXED):
            break
        if not retained:
            raise PreconditionViolated(["forced triples are not realized by the adjacency walks"])
        victim = max(retained, key=lambda label: (-ledger.triples[label].weight, label))
        retained.remove(victim)
        dropped.append(ledger.triples[victim])
        logger.warning(
            "Dropping contracted triple %s: lifted walks exceed a repeat multiplicity",
            ledger.triples[victim].describe(),
        )

    selected = target.intervals
    weight = sum((e.weight for e in selected), 0)
    logger.info(
        "Selected %s triples (%s forced, %s contracted), weight %s",
        len(selected), len(classification.forced), len(retained), weight,
    )
    return TripleOptimum(selected, weight, assembly, classification, ledger, tuple(dropped))
