"""
Line-oriented hypergraph files.

    V <name> <mult>
    A <u> <v> <weight>
    I <weight> <k> <v1> ... <vk> [O <l> <w1> ... <wl>]

``#`` starts a comment. Weights are integers. The canonical form lists
vertices, then adjacencies, then intervals, each sorted.
"""

import hashlib
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from core.errors import DuplicateVertex, FormatSyntaxError, UnknownVertex
from core.hypergraph import AssemblyHypergraph, Edge, Weight, validate

_TOKEN = re.compile(r"\S+")
_INTEGER = re.compile(r"[+-]?\d+")


@dataclass(frozen=True)
class Token:
    text: str
    line: int
    column: int


def tokenize(text: str) -> List[List[Token]]:
    """Split ``text`` into records of tokens, dropping comments and blank lines."""
    records = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = [Token(m.group(), number, m.start() + 1) for m in _TOKEN.finditer(line)]
        if tokens:
            records.append(tokens)
    return records


def integer(token: Token, source: Optional[str], minimum: Optional[int] = None) -> int:
    if not _INTEGER.fullmatch(token.text):
        raise FormatSyntaxError(f"expected an integer, got {token.text!r}", token.line, token.column, source)
    value = int(token.text)
    if minimum is not None and value < minimum:
        raise FormatSyntaxError(
            f"expected an integer >= {minimum}, got {value}", token.line, token.column, source
        )
    return value


def format_weight(weight: Weight) -> str:
    value = Fraction(weight)
    if value.denominator != 1:
        raise ValueError(f"weight {weight} is not an integer")
    return str(value.numerator)


def _expect_length(record: List[Token], size: int, what: str, source: Optional[str]) -> None:
    if len(record) != size:
        head = record[0]
        raise FormatSyntaxError(
            f"{what} record takes {size - 1} fields, got {len(record) - 1}", head.line, head.column, source
        )


def _names(tokens: List[Token], known: Dict[str, int], source: Optional[str]) -> Tuple[str, ...]:
    for token in tokens:
        if token.text not in known:
            raise UnknownVertex(f"vertex {token.text!r} is not declared", token.line, token.column, source)
    return tuple(t.text for t in tokens)


def _parse_interval(record: List[Token], known: Dict[str, int], source: Optional[str]) -> Edge:
    head = record[0]
    if len(record) < 3:
        raise FormatSyntaxError("interval record needs a weight and a size", head.line, head.column, source)
    weight = integer(record[1], source)
    size = integer(record[2], source, minimum=3)
    members = record[3:3 + size]
    if len(members) != size:
        raise FormatSyntaxError(f"interval lists fewer than {size} vertices", head.line, head.column, source)
    names = _names(members, known, source)
    if len(set(names)) != size:
        raise FormatSyntaxError("interval repeats a vertex", head.line, head.column, source)

    rest = record[3 + size:]
    if not rest:
        return Edge.interval(names, weight)
    if rest[0].text != "O" or len(rest) < 2:
        token = rest[0]
        raise FormatSyntaxError(f"unexpected {token.text!r} after interval", token.line, token.column, source)
    length = integer(rest[1], source, minimum=size)
    order_tokens = rest[2:]
    if len(order_tokens) != length:
        raise FormatSyntaxError(
            f"order declares {length} vertices, lists {len(order_tokens)}", rest[0].line, rest[0].column, source
        )
    order = _names(order_tokens, known, source)
    if set(order) != set(names):
        raise FormatSyntaxError(
            "order must use exactly the interval's vertices", rest[0].line, rest[0].column, source
        )
    return Edge.interval(names, weight, order)


def parse_hypergraph(text: str, source: Optional[str] = None) -> AssemblyHypergraph:
    """
    Read a hypergraph file.

    :raises FormatSyntaxError: malformed records, self-loops, duplicate edges.
    :raises DuplicateVertex: a vertex declared twice.
    :raises UnknownVertex: an edge naming an undeclared vertex.
    """
    records = tokenize(text)
    multiplicity: Dict[str, int] = {}
    for record in records:
        head = record[0]
        if head.text != "V":
            continue
        _expect_length(record, 3, "V", source)
        name = record[1]
        if name.text in multiplicity:
            raise DuplicateVertex(f"vertex {name.text!r} declared twice", name.line, name.column, source)
        multiplicity[name.text] = integer(record[2], source, minimum=1)

    edges: List[Edge] = []
    seen = set()
    for record in records:
        head = record[0]
        if head.text == "V":
            continue
        if head.text == "A":
            _expect_length(record, 4, "A", source)
            u, v = _names(record[1:3], multiplicity, source)
            if u == v:
                raise FormatSyntaxError(f"adjacency {u}-{v} is a self-loop", head.line, head.column, source)
            edge = Edge.adjacency(u, v, integer(record[3], source))
        elif head.text == "I":
            edge = _parse_interval(record, multiplicity, source)
        else:
            raise FormatSyntaxError(f"unknown record {head.text!r}", head.line, head.column, source)
        if edge.members in seen:
            raise FormatSyntaxError(f"duplicate edge {edge.describe()}", head.line, head.column, source)
        seen.add(edge.members)
        edges.append(edge)

    h = AssemblyHypergraph(multiplicity, tuple(edges))
    validate(h)
    return h


def serialize_hypergraph(h: AssemblyHypergraph) -> str:
    lines = [f"V {v} {mult}" for v, mult in h.multiplicity.items()]
    for edge in h.adjacencies:
        u, v = edge.sorted_members()
        lines.append(f"A {u} {v} {format_weight(edge.weight)}")
    for edge in h.intervals:
        members = edge.sorted_members()
        line = f"I {format_weight(edge.weight)} {len(members)} {' '.join(members)}"
        if edge.order:
            line += f" O {len(edge.order)} {' '.join(edge.order)}"
        lines.append(line)
    return "\n".join(lines) + "\n"


def hypergraph_digest(h: AssemblyHypergraph) -> str:
    """Stable short digest of the canonical serialization."""
    return hashlib.sha256(serialize_hypergraph(h).encode("utf-8")).hexdigest()[:16]
