"""Doubled-vertex encoding of oriented markers and the alternation check."""

import logging
from dataclasses import dataclass, field
from typing import Dict, Mapping, Optional, Tuple

from core.assembly import Assembly
from core.compatibility import CompatibilityReport, Violation
from core.errors import InvalidHypergraph
from core.hypergraph import AssemblyHypergraph, Edge, Vertex, Weight, validate
from formats.marker_format import ENDS, MarkerInstance

logger = logging.getLogger(__name__)

REQUIRED = "required"
INFERRED = "inferred"


def extremity(marker: Vertex, end: str) -> Vertex:
    return f"{marker}.{end}"


@dataclass(frozen=True)
class ExtremityEncoding:
    hypergraph: AssemblyHypergraph
    required: Tuple[Edge, ...]
    inferred: Tuple[Edge, ...]
    required_weight: Weight
    marker_of: Mapping[Vertex, Vertex] = field(default_factory=dict)

    def pair_class(self, a: Vertex, b: Vertex) -> Optional[str]:
        pair = frozenset((a, b))
        if any(e.members == pair for e in self.required):
            return REQUIRED
        if any(e.members == pair for e in self.inferred):
            return INFERRED
        return None

    def mate(self, vertex: Vertex) -> Vertex:
        """The other extremity of the same marker."""
        marker = self.marker_of[vertex]
        head, tail = extremity(marker, "h"), extremity(marker, "t")
        return tail if vertex == head else head

    def inferred_total(self) -> Weight:
        return sum((e.weight for e in self.inferred), 0)


def encode_extremities(mi: MarkerInstance) -> ExtremityEncoding:
    """
    Split every marker m into extremities m.h and m.t of multiplicity c(m),
    joined by a required adjacency of weight 1 + the positive inferred weight
    total; oriented adjacencies become inferred adjacencies.
    """
    mi.validate()
    marker_of: Dict[Vertex, Vertex] = {}
    multiplicity: Dict[Vertex, int] = {}
    for marker, mult in mi.multiplicity.items():
        for end in ENDS:
            name = extremity(marker, end)
            if name in marker_of:
                raise InvalidHypergraph(f"extremity name {name!r} is produced by two markers")
            marker_of[name] = marker
            multiplicity[name] = mult

    inferred = tuple(
        Edge.adjacency(extremity(a.left, a.left_end), extremity(a.right, a.right_end), a.weight)
        for a in mi.adjacencies
    )
    required_weight = 1 + sum((e.weight for e in inferred if e.weight > 0), 0)
    required = tuple(
        Edge.adjacency(extremity(m, "h"), extremity(m, "t"), required_weight) for m in mi.markers
    )
    h = AssemblyHypergraph(multiplicity, required + inferred)
    validate(h)
    logger.debug("Encoded %s markers, %s inferred adjacencies", len(mi.markers), len(inferred))
    return ExtremityEncoding(h, required, inferred, required_weight, marker_of)


def check_alternation(a: Assembly, enc: ExtremityEncoding) -> CompatibilityReport:
    """
    Every consecutive pair must be required or inferred, the classes must
    alternate (around the wrap for circular walks), and linear walks must
    start and end with a required pair.
    """
    violations = []
    for walk in a.walks:
        pairs = list(walk.pairs())
        if not pairs:
            violations.append(Violation("alternation", walk.render(), "walk stops inside a marker"))
            continue
        classes = [enc.pair_class(x, y) for x, y in pairs]
        unclassified = [p for p, c in zip(pairs, classes) if c is None]
        if unclassified:
            x, y = unclassified[0]
            violations.append(
                Violation("alternation", walk.render(), f"{x}-{y} is neither required nor inferred")
            )
            continue
        neighbours = list(zip(classes, classes[1:]))
        if walk.is_circular:
            neighbours.append((classes[-1], classes[0]))
        if any(left == right for left, right in neighbours):
            violations.append(
                Violation("alternation", walk.render(), "required and inferred pairs do not alternate")
            )
        elif not walk.is_circular and (classes[0] != REQUIRED or classes[-1] != REQUIRED):
            violations.append(
                Violation("alternation", walk.render(), "walk does not start and end on a marker boundary")
            )
    return CompatibilityReport(tuple(violations))
