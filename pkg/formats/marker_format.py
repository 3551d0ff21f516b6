"""
Marker instance files.

    M <name> <mult>
    OA <m1> <h|t> <m2> <h|t> <weight>

Interval records are not part of this format.
"""

from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Tuple

from core.errors import (
    BadMultiplicity,
    DegenerateEdge,
    DuplicateVertex,
    FormatSyntaxError,
    InvalidHypergraph,
    UndeclaredVertex,
    UnknownVertex,
)
from core.hypergraph import Vertex, Weight
from formats.hypergraph_format import format_weight, integer, tokenize

ENDS = ("h", "t")


@dataclass(frozen=True)
class OrientedAdjacency:
    """Co-localization of one marker end with another, e.g. (m1, h)-(m2, t)."""

    left: Vertex
    left_end: str
    right: Vertex
    right_end: str
    weight: Weight = 1

    def __post_init__(self):
        if (self.right, self.right_end) < (self.left, self.left_end):
            left, left_end = self.right, self.right_end
            object.__setattr__(self, "right", self.left)
            object.__setattr__(self, "right_end", self.left_end)
            object.__setattr__(self, "left", left)
            object.__setattr__(self, "left_end", left_end)

    @property
    def ends(self) -> Tuple[Tuple[Vertex, str], Tuple[Vertex, str]]:
        return (self.left, self.left_end), (self.right, self.right_end)

    def describe(self) -> str:
        return f"({self.left},{self.left_end})-({self.right},{self.right_end})"


@dataclass(frozen=True)
class MarkerInstance:
    multiplicity: Mapping[Vertex, int]
    adjacencies: Tuple[OrientedAdjacency, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "multiplicity", dict(sorted(self.multiplicity.items())))
        object.__setattr__(self, "adjacencies", tuple(sorted(self.adjacencies, key=lambda a: a.ends)))

    @property
    def markers(self) -> Tuple[Vertex, ...]:
        return tuple(self.multiplicity)

    def validate(self) -> None:
        for marker, mult in self.multiplicity.items():
            if isinstance(mult, bool) or not isinstance(mult, int) or mult < 1:
                raise BadMultiplicity(f"marker {marker!r} has multiplicity {mult!r}")
        seen = set()
        for adjacency in self.adjacencies:
            for marker, end in adjacency.ends:
                if marker not in self.multiplicity:
                    raise UndeclaredVertex(f"{adjacency.describe()} uses undeclared marker {marker!r}")
                if end not in ENDS:
                    raise InvalidHypergraph(f"{adjacency.describe()} has end {end!r}; expected h or t")
            if adjacency.left == adjacency.right:
                raise DegenerateEdge(f"{adjacency.describe()} pairs a marker with itself")
            if adjacency.ends in seen:
                raise InvalidHypergraph(f"{adjacency.describe()} listed twice")
            seen.add(adjacency.ends)


def parse_markers(text: str, source: Optional[str] = None) -> MarkerInstance:
    records = tokenize(text)
    multiplicity: Dict[str, int] = {}
    for record in records:
        head = record[0]
        if head.text != "M":
            continue
        if len(record) != 3:
            raise FormatSyntaxError("M record takes 2 fields", head.line, head.column, source)
        name = record[1]
        if name.text in multiplicity:
            raise DuplicateVertex(f"marker {name.text!r} declared twice", name.line, name.column, source)
        multiplicity[name.text] = integer(record[2], source, minimum=1)

    adjacencies: List[OrientedAdjacency] = []
    seen = set()
    for record in records:
        head = record[0]
        if head.text == "M":
            continue
        if head.text == "I":
            raise FormatSyntaxError(
                "interval records are not supported in marker files", head.line, head.column, source
            )
        if head.text != "OA":
            raise FormatSyntaxError(f"unknown record {head.text!r}", head.line, head.column, source)
        if len(record) != 6:
            raise FormatSyntaxError("OA record takes 5 fields", head.line, head.column, source)
        for token in (record[1], record[3]):
            if token.text not in multiplicity:
                raise UnknownVertex(f"marker {token.text!r} is not declared", token.line, token.column, source)
        for token in (record[2], record[4]):
            if token.text not in ENDS:
                raise FormatSyntaxError(
                    f"marker end must be h or t, got {token.text!r}", token.line, token.column, source
                )
        if record[1].text == record[3].text:
            raise FormatSyntaxError(
                f"oriented adjacency pairs marker {record[1].text!r} with itself", head.line, head.column, source
            )
        adjacency = OrientedAdjacency(
            record[1].text, record[2].text, record[3].text, record[4].text, integer(record[5], source)
        )
        if adjacency.ends in seen:
            raise FormatSyntaxError(f"duplicate {adjacency.describe()}", head.line, head.column, source)
        seen.add(adjacency.ends)
        adjacencies.append(adjacency)

    instance = MarkerInstance(multiplicity, tuple(adjacencies))
    instance.validate()
    return instance


def serialize_markers(mi: MarkerInstance) -> str:
    lines = [f"M {m} {mult}" for m, mult in mi.multiplicity.items()]
    for a in mi.adjacencies:
        lines.append(f"OA {a.left} {a.left_end} {a.right} {a.right_end} {format_weight(a.weight)}")
    return "\n".join(lines) + "\n"
