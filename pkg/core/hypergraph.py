import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Mapping, Tuple, Union

import networkx as nx

from core.errors import (
    BadMultiplicity,
    BadOrder,
    DegenerateEdge,
    OrderedAdjacency,
    UndeclaredVertex,
)

logger = logging.getLogger(__name__)

Vertex = str
Weight = Union[int, Fraction]


@dataclass(frozen=True)
class Edge:
    """An adjacency (two members) or an interval, with weight and optional order."""

    members: FrozenSet[Vertex]
    weight: Weight = 1
    order: Tuple[Vertex, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))
        object.__setattr__(self, "order", tuple(self.order))

    @classmethod
    def adjacency(cls, u: Vertex, v: Vertex, weight: Weight = 1) -> "Edge":
        return cls(frozenset((u, v)), weight)

    @classmethod
    def interval(
        cls,
        members: Iterable[Vertex],
        weight: Weight = 1,
        order: Iterable[Vertex] = (),
    ) -> "Edge":
        return cls(frozenset(members), weight, tuple(order))

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def is_adjacency(self) -> bool:
        return len(self.members) == 2

    @property
    def is_interval(self) -> bool:
        return len(self.members) > 2

    @property
    def is_ordered(self) -> bool:
        return bool(self.order)

    def sorted_members(self) -> Tuple[Vertex, ...]:
        return tuple(sorted(self.members))

    def sort_key(self):
        return (self.sorted_members(), self.order, Fraction(self.weight))

    def unordered(self) -> "Edge":
        return Edge(self.members, self.weight)

    def describe(self) -> str:
        if self.order:
            return ".".join(self.order)
        return "{" + ",".join(self.sorted_members()) + "}"


@dataclass(frozen=True)
class AssemblyHypergraph:
    """
    Vertices with multiplicities plus weighted, optionally ordered edges.

    The multiplicity mapping doubles as the vertex set. Edges are kept as a
    sorted, de-duplicated tuple so equal instances compare equal.
    """

    multiplicity: Mapping[Vertex, int]
    edges: Tuple[Edge, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "multiplicity", dict(sorted(self.multiplicity.items())))
        object.__setattr__(self, "edges", tuple(sorted(set(self.edges), key=Edge.sort_key)))

    @property
    def vertices(self) -> Tuple[Vertex, ...]:
        return tuple(self.multiplicity)

    def c(self, vertex: Vertex) -> int:
        return self.multiplicity[vertex]

    @property
    def adjacencies(self) -> Tuple[Edge, ...]:
        return tuple(e for e in self.edges if e.is_adjacency)

    @property
    def intervals(self) -> Tuple[Edge, ...]:
        return tuple(e for e in self.edges if e.is_interval)

    @property
    def repeats(self) -> FrozenSet[Vertex]:
        return frozenset(v for v, mult in self.multiplicity.items() if mult > 1)

    def is_adjacency_graph(self) -> bool:
        return all(e.is_adjacency for e in self.edges)

    def has_ordered_intervals(self) -> bool:
        return any(e.is_ordered for e in self.edges)

    def with_edges(self, edges: Iterable[Edge]) -> "AssemblyHypergraph":
        return AssemblyHypergraph(self.multiplicity, tuple(edges))

    def incident(self, vertex: Vertex) -> Tuple[Edge, ...]:
        return tuple(e for e in self.edges if vertex in e.members)

    def neighbors(self, vertex: Vertex) -> FrozenSet[Vertex]:
        found = set()
        for edge in self.incident(vertex):
            found.update(edge.members)
        found.discard(vertex)
        return frozenset(found)

    def total_weight(self) -> Weight:
        return sum((e.weight for e in self.edges), 0)


@dataclass(frozen=True)
class Stats:
    """Derived sizes: n, m, s, Δ (max_edge_size), δ (max_degree), γ, ρ and V_R."""

    n: int
    m: int
    s: int
    max_edge_size: int
    max_degree: int
    max_multiplicity: int
    repeat_count: int
    repeats: FrozenSet[Vertex] = field(default_factory=frozenset)


def validate(h: AssemblyHypergraph) -> Stats:
    """Check every structural invariant of ``h`` and return its statistics."""
    for vertex, mult in h.multiplicity.items():
        if isinstance(mult, bool) or not isinstance(mult, int) or mult < 1:
            raise BadMultiplicity(f"vertex {vertex!r} has multiplicity {mult!r}; expected an integer >= 1")

    declared = h.multiplicity.keys()
    for edge in h.edges:
        if len(edge.members) < 2:
            raise DegenerateEdge(f"edge {edge.describe()} has fewer than two distinct vertices")
        missing = sorted(edge.members - declared)
        if missing:
            raise UndeclaredVertex(f"edge {edge.describe()} uses undeclared vertices {missing}")
        if edge.order:
            if edge.is_adjacency:
                raise OrderedAdjacency(f"adjacency {edge.describe()} carries an order")
            if set(edge.order) != edge.members:
                raise BadOrder(
                    f"order {'.'.join(edge.order)} does not cover exactly the members of "
                    f"{{{','.join(edge.sorted_members())}}}"
                )

    degree: Dict[Vertex, int] = {v: 0 for v in h.multiplicity}
    for edge in h.edges:
        for vertex in edge.members:
            degree[vertex] += 1

    repeats = h.repeats
    stats = Stats(
        n=len(h.multiplicity),
        m=len(h.edges),
        s=sum(e.size for e in h.edges),
        max_edge_size=max((e.size for e in h.edges), default=0),
        max_degree=max(degree.values(), default=0),
        max_multiplicity=max(h.multiplicity.values(), default=0),
        repeat_count=len(repeats),
        repeats=repeats,
    )
    logger.debug("Validated hypergraph n=%s m=%s rho=%s", stats.n, stats.m, stats.repeat_count)
    return stats


def induced_adjacency_graph(h: AssemblyHypergraph) -> AssemblyHypergraph:
    return h.with_edges(h.adjacencies)


def _clique_graph(vertices: Iterable[Vertex], vertex_sets: Iterable[Iterable[Vertex]]) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(vertices)
    for group in vertex_sets:
        ordered = sorted(group)
        # a path over the members is enough for connectivity
        nx.add_path(graph, ordered)
    return graph


def connected_components(h: AssemblyHypergraph) -> List[Tuple[Vertex, ...]]:
    """Vertex sets of the hypergraph's components, sorted, smallest vertex first."""
    graph = _clique_graph(h.vertices, (e.members for e in h.edges))
    return sorted(tuple(sorted(component)) for component in nx.connected_components(graph))


def repeat_clusters(h: AssemblyHypergraph) -> FrozenSet[FrozenSet[Vertex]]:
    """Maximal repeat clusters: components of the hypergraph restricted to V_R."""
    repeats = h.repeats
    graph = _clique_graph(
        sorted(repeats),
        (e.members & repeats for e in h.edges if e.members & repeats),
    )
    return frozenset(frozenset(component) for component in nx.connected_components(graph))


def fresh_vertex(base: str, taken: Iterable[Vertex]) -> Vertex:
    """``base`` itself if unused, else ``base`` with a numeric suffix that is."""
    used = set(taken)
    if base not in used:
        return base
    index = 1
    while f"{base}~{index}" in used:
        index += 1
    return f"{base}~{index}"
