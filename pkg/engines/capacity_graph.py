"""Maximum-weight degree-constrained subgraphs through a matching gadget."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Any, Callable, Dict, Iterable, Mapping, Optional, Tuple

import networkx as nx

from core.hypergraph import AssemblyHypergraph, Vertex, Weight

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CapacityEdge:
    """An edge of a capacity graph; ``label`` tells labeled parallel edges apart."""

    u: Vertex
    v: Vertex
    weight: Weight = 1
    label: str = ""

    def __post_init__(self):
        if self.u == self.v:
            raise ValueError(f"capacity graph edge {self.u}-{self.v} is a loop")
        if self.v < self.u:
            left, right = self.v, self.u
            object.__setattr__(self, "u", left)
            object.__setattr__(self, "v", right)

    def sort_key(self):
        return (self.u, self.v, self.label)

    @property
    def ends(self) -> Tuple[Vertex, Vertex]:
        return self.u, self.v


@dataclass(frozen=True)
class CapacityGraph:
    capacity: Mapping[Vertex, int]
    edges: Tuple[CapacityEdge, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "capacity", dict(sorted(self.capacity.items())))
        object.__setattr__(self, "edges", tuple(sorted(self.edges, key=CapacityEdge.sort_key)))

    @classmethod
    def from_hypergraph(cls, h: AssemblyHypergraph) -> "CapacityGraph":
        """Adjacencies of ``h`` with capacity 2c(v) at every vertex."""
        edges = []
        for edge in h.adjacencies:
            u, v = edge.sorted_members()
            edges.append(CapacityEdge(u, v, edge.weight))
        return cls({v: 2 * h.c(v) for v in h.vertices}, tuple(edges))


@dataclass(frozen=True)
class CapacitatedSelection:
    edges: Tuple[CapacityEdge, ...]
    weight: Weight

    def degree(self) -> Dict[Vertex, int]:
        counts: Dict[Vertex, int] = {}
        for edge in self.edges:
            for end in edge.ends:
                counts[end] = counts.get(end, 0) + 1
        return counts


def _integer_weights(weights: Iterable[Weight]) -> Tuple[int, ...]:
    fractions = [Fraction(w) for w in weights]
    scale = lcm(1, *(f.denominator for f in fractions))
    return tuple(int(f * scale) for f in fractions)


def max_weight_capacitated_subgraph(
    g: CapacityGraph,
    priority: Optional[Callable[[CapacityEdge], Any]] = None,
) -> CapacitatedSelection:
    """
    Select a maximum-weight edge subset with selected degree <= capacity(v).

    Each edge e = uv becomes two gadget nodes (e, u) and (e, v) joined to
    each other and to the copies of u and v; e is selected when both gadget
    nodes are matched to vertex copies. Among optima, the set containing the
    earliest edges wins, edges ordered by ``priority`` (default: the sorted
    edge list). Edges of non-positive weight are never selected.
    """
    candidates = [e for e in g.edges if e.weight > 0]
    if priority is not None:
        candidates.sort(key=priority)
    if not candidates:
        return CapacitatedSelection((), 0)

    scaled = _integer_weights(e.weight for e in candidates)
    count = len(candidates)
    # the low bits break ties in favour of earlier edges
    gadget_weight = [w * (1 << count) + (1 << (count - 1 - i)) for i, w in enumerate(scaled)]

    degree: Dict[Vertex, int] = {}
    for edge in candidates:
        for end in edge.ends:
            degree[end] = degree.get(end, 0) + 1

    gadget = nx.Graph()
    for index, edge in enumerate(candidates):
        weight = gadget_weight[index]
        near, far = ("e", index, 0), ("e", index, 1)
        gadget.add_edge(near, far, weight=weight)
        for side, end in ((near, edge.u), (far, edge.v)):
            copies = min(g.capacity.get(end, 0), degree[end])
            for copy in range(copies):
                gadget.add_edge(side, ("v", end, copy), weight=weight)

    matching = nx.max_weight_matching(gadget, maxcardinality=False)
    matched = set()
    for left, right in matching:
        if left[0] == "e" and right[0] == "v":
            matched.add(left[1:])
        elif right[0] == "e" and left[0] == "v":
            matched.add(right[1:])

    chosen = tuple(
        edge for index, edge in enumerate(candidates)
        if (index, 0) in matched and (index, 1) in matched
    )
    total = sum((e.weight for e in chosen), 0)
    logger.debug("Capacitated subgraph keeps %s of %s edges, weight %s", len(chosen), len(g.edges), total)
    return CapacitatedSelection(chosen, total)
