"""Realization of ordered intervals that span a repeat cluster."""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Tuple

from core.assembly import GenomeModel, Verdict
from core.errors import PreconditionViolated
from core.hypergraph import AssemblyHypergraph, Edge, Vertex, fresh_vertex, repeat_clusters, validate
from engines.adjacency import decide_adjacency
from engines.base_engine import DecisionEngine, certify
from engines.fpt import decide_fpt

logger = logging.getLogger(__name__)

ENGINE_NAME = "spanning"

EXPERIMENTAL_NOTE = "experimental: mixed-model spanning realization decided by the fpt engine"


@dataclass(frozen=True)
class SpanningRealization:
    """
    The rewritten hypergraph H' = (V', E' minus D, c').

    ``multiplicity`` is c' and may hold zero or negative values; ``decode``
    maps each fresh chain vertex to the repeat occurrence it stands for.
    """

    multiplicity: Mapping[Vertex, int]
    edges: Tuple[Edge, ...]
    decode: Mapping[Vertex, Vertex] = field(default_factory=dict)
    moved: Tuple[Edge, ...] = ()
    spanning: Tuple[Edge, ...] = ()

    def shortfalls(self) -> List[str]:
        """Vertices whose remaining multiplicity cannot cover what H' still asks of them."""
        touched = {v for e in self.edges for v in e.members}
        reasons = []
        for vertex, mult in self.multiplicity.items():
            if mult < 0:
                reasons.append(f"c'({vertex}) = {mult}")
            elif mult == 0 and vertex in touched:
                reasons.append(f"c'({vertex}) = 0 but {vertex} still has edges")
        return reasons

    def hypergraph(self) -> AssemblyHypergraph:
        """H' without the vertices whose copies were all used up by chains."""
        kept = {v: mult for v, mult in self.multiplicity.items() if mult >= 1}
        return AssemblyHypergraph(kept, self.edges)

    def fresh_for(self, repeat: Vertex) -> Tuple[Vertex, ...]:
        return tuple(sorted(t for t, r in self.decode.items() if r == repeat))


def is_spanning_interval(e: Edge, h: AssemblyHypergraph) -> bool:
    """True iff ``e`` is ordered u.s.v with unique u, v and s inside one repeat cluster."""
    if not e.is_ordered or len(e.order) < 3:
        return False
    u, inner, v = e.order[0], e.order[1:-1], e.order[-1]
    if u == v or h.multiplicity.get(u) != 1 or h.multiplicity.get(v) != 1:
        return False
    if not set(inner) <= h.repeats:
        return False
    return any(set(inner) <= cluster for cluster in repeat_clusters(h))


def shape_violations(h: AssemblyHypergraph) -> List[str]:
    """
    Every ordered interval must be spanning; every other interval holding a
    repeat must hold exactly one, r, with e minus r present as an edge.
    """
    present = {e.members for e in h.edges}
    reasons = []
    for edge in h.intervals:
        if edge.is_ordered:
            if not is_spanning_interval(edge, h):
                reasons.append(f"ordered interval {edge.describe()} does not span a repeat cluster")
            continue
        repeats = edge.members & h.repeats
        if not repeats:
            continue
        if len(repeats) > 1:
            reasons.append(f"unordered interval {edge.describe()} holds {len(repeats)} repeats")
        elif edge.members - repeats not in present:
            reasons.append(f"unordered interval {edge.describe()} has no companion edge")
    return reasons


def is_adjacency_spanning_shape(h: AssemblyHypergraph) -> bool:
    """Every interval is an ordered spanning interval."""
    return all(is_spanning_interval(e, h) for e in h.intervals)


def realize(h: AssemblyHypergraph) -> SpanningRealization:
    """
    Rewrite each spanning interval u.r1...rk.v into a chain u.t1...tk.v of
    fresh multiplicity-one vertices, decrementing c'(ri) per occurrence.

    Adjacencies of the original graph between consecutive order elements,
    {u, r1} and {rk, v} among them, are moved to D. An interval whose order
    mirrors one already rewritten shares its chain.
    """
    validate(h)
    loose = [e.describe() for e in h.edges if e.is_ordered and not is_spanning_interval(e, h)]
    if loose:
        raise PreconditionViolated([f"ordered interval {o} is not spanning" for o in loose])

    multiplicity: Dict[Vertex, int] = dict(h.multiplicity)
    taken = set(h.vertices)
    adjacency_by_members = {a.members: a for a in h.adjacencies}
    decode: Dict[Vertex, Vertex] = {}
    moved: Dict[frozenset, Edge] = {}
    chains: List[Edge] = []
    spanning: List[Edge] = []
    seen_orders = set()

    for edge in h.intervals:
        if not edge.is_ordered:
            continue
        spanning.append(edge)
        canonical = min(edge.order, edge.order[::-1])
        if canonical in seen_orders:
            continue
        seen_orders.add(canonical)

        path = [edge.order[0]]
        for repeat in edge.order[1:-1]:
            fresh = fresh_vertex(f"t{len(decode) + 1}", taken)
            taken.add(fresh)
            decode[fresh] = repeat
            multiplicity[fresh] = 1
            multiplicity[repeat] -= 1
            path.append(fresh)
        path.append(edge.order[-1])
        chains.extend(Edge.adjacency(a, b) for a, b in zip(path, path[1:]))

        for a, b in zip(edge.order, edge.order[1:]):
            pair = frozenset((a, b))
            if pair in adjacency_by_members:
                moved[pair] = adjacency_by_members[pair]

    kept = [e for e in h.edges if not e.is_ordered and e.members not in moved]
    realization = SpanningRealization(
        multiplicity,
        tuple(kept + chains),
        decode,
        tuple(sorted(moved.values(), key=Edge.sort_key)),
        tuple(spanning),
    )
    logger.debug(
        "Realized %s spanning intervals with %s fresh vertices, %s adjacencies moved",
        len(spanning), len(decode), len(moved),
    )
    return realization


def decide_spanning(h: AssemblyHypergraph, model: GenomeModel) -> Verdict:
    """
    No when some c'(r) is negative; otherwise decide H' (adjacency engine
    when it is adjacency-only, fpt engine otherwise) and decode the witness.
    """
    validate(h)
    reasons = shape_violations(h)
    if reasons:
        raise PreconditionViolated(reasons)

    realization = realize(h)
    shortfalls = realization.shortfalls()
    if shortfalls:
        return certify(Verdict.no(ENGINE_NAME, shortfalls), h, model)

    rewritten = realization.hypergraph()
    notes: List[str] = []
    if rewritten.is_adjacency_graph():
        inner = decide_adjacency(rewritten, model)
    else:
        inner = decide_fpt(rewritten, model)
        if model is GenomeModel.MIXED:
            notes.append(EXPERIMENTAL_NOTE)

    if not inner.is_yes:
        return certify(Verdict.no(ENGINE_NAME, notes + list(inner.notes)), h, model)
    witness = inner.witness.decode(realization.decode)
    return certify(Verdict.yes(witness, ENGINE_NAME, notes), h, model)


class SpanningEngine(DecisionEngine):
    name = ENGINE_NAME

    def decide(self, h: AssemblyHypergraph, model: GenomeModel) -> Verdict:
        return decide_spanning(h, model)

    def unsupported(self, h: AssemblyHypergraph) -> Tuple[str, ...]:
        return tuple(shape_violations(h))
