"""
Decision for hypergraphs with repeats by enumerating neighbour choices.

Every repeat r is split into c(r) copies. A neighbour choice lets each copy
pick at most two neighbours; the picked pairs (f-edges) glue copies into
chains between unique vertices. Each edge of the input is then rewritten over
the copies its chain reaches, giving a multiplicity-one hypergraph that the
c1p engine decides. A witness decodes back by mapping copies to their repeat.
"""

import logging
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations, islice
from math import comb
from typing import Callable, Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Set, Tuple

import networkx as nx

from core.assembly import Assembly, GenomeModel, Verdict, Walk
from core.errors import AmbiguousChain, PreconditionViolated
from core.hypergraph import AssemblyHypergraph, Edge, Vertex, fresh_vertex, validate
from engines.base_engine import DecisionEngine, certify
from engines.c1p import solve_c1p
from engines.fpt_settings import FptSettings

logger = logging.getLogger(__name__)

ENGINE_NAME = "fpt"

FEdge = FrozenSet[Vertex]


@dataclass(frozen=True)
class RepeatCopySet:
    """Copies r#1..r#c(r) of every repeat r, with the copy -> repeat decode map."""

    copies: Mapping[Vertex, Tuple[Vertex, ...]]
    origin: Mapping[Vertex, Vertex]

    @classmethod
    def of(cls, h: AssemblyHypergraph) -> "RepeatCopySet":
        taken = set(h.vertices)
        copies: Dict[Vertex, Tuple[Vertex, ...]] = {}
        origin: Dict[Vertex, Vertex] = {}
        for repeat in sorted(h.repeats):
            names = []
            for index in range(1, h.c(repeat) + 1):
                name = fresh_vertex(f"{repeat}#{index}", taken)
                taken.add(name)
                names.append(name)
                origin[name] = repeat
            copies[repeat] = tuple(names)
        return cls(copies, origin)

    @property
    def ordered(self) -> Tuple[Vertex, ...]:
        """All copies in (repeat, index) order."""
        return tuple(copy for repeat in sorted(self.copies) for copy in self.copies[repeat])


@dataclass(frozen=True)
class NeighborChoice:
    """The mapping f: each copy with the (sorted) neighbours it picked."""

    chosen: Tuple[Tuple[Vertex, Tuple[Vertex, ...]], ...] = ()

    @classmethod
    def from_mapping(cls, mapping: Mapping[Vertex, Iterable[Vertex]]) -> "NeighborChoice":
        return cls(tuple((copy, tuple(sorted(mapping[copy]))) for copy in sorted(mapping)))

    def as_dict(self) -> Dict[Vertex, FrozenSet[Vertex]]:
        return {copy: frozenset(picked) for copy, picked in self.chosen}

    def f_edges(self) -> FrozenSet[FEdge]:
        return frozenset(frozenset((copy, n)) for copy, picked in self.chosen for n in picked)

    def describe(self) -> str:
        return " ".join(f"{copy}->{{{','.join(picked)}}}" for copy, picked in self.chosen)


@dataclass(frozen=True)
class ExpandedHypergraph:
    hypergraph: AssemblyHypergraph
    f_edges: FrozenSet[FEdge]
    expanded: Tuple[Tuple[Edge, Edge], ...]
    decode: Mapping[Vertex, Vertex]


def extended_neighbourhood(h: AssemblyHypergraph, repeat: Vertex, copies: RepeatCopySet) -> FrozenSet[Vertex]:
    """
    N'(r): unique neighbours of r, copies of repeat neighbours, and r's own
    copies. Empty when r lies in no edge.
    """
    if not h.incident(repeat):
        return frozenset()
    found: Set[Vertex] = set(copies.copies[repeat])
    for neighbour in h.neighbors(repeat):
        if neighbour in copies.copies:
            found.update(copies.copies[neighbour])
        else:
            found.add(neighbour)
    return frozenset(found)


def choice_bound(h: AssemblyHypergraph) -> int:
    """Closed-form ceiling on the number of neighbour choices for ``h``."""
    stats = validate(h)
    slots = stats.max_degree * (stats.max_edge_size + stats.repeat_count * stats.max_multiplicity - 1)
    return (comb(slots, 2) + slots + 1) ** (stats.repeat_count * stats.max_multiplicity)


def enumerate_choices(
    h: AssemblyHypergraph,
    copies: Optional[RepeatCopySet] = None,
    reduced: bool = False,
) -> Iterator[NeighborChoice]:
    """
    Stream every neighbour choice whose f-edges leave each vertex with degree
    at most two. Copies are taken in (repeat, index) order and neighbour
    subsets by size, then lexicographically.

    With ``reduced`` the stream keeps one choice per f-edge graph up to
    relabeling the copies of a repeat, and drops choices that leave an
    adjacency at a repeat without an f-edge behind it. Every reduced choice
    also appears in the full stream; decide_fpt consumes the reduced one.
    """
    validate(h)
    copies = copies or RepeatCopySet.of(h)
    if reduced:
        for f_edges in _f_edge_graphs(h, copies):
            yield _choice_from_edges(f_edges, copies)
        return

    order = copies.ordered
    options = []
    for copy in order:
        pool = sorted(extended_neighbourhood(h, copies.origin[copy], copies) - {copy})
        options.append([()] + [(n,) for n in pool] + list(combinations(pool, 2)))

    degree: Counter = Counter()
    edges: Set[FEdge] = set()
    picked: List[Tuple[Vertex, Tuple[Vertex, ...]]] = []

    def walk(index: int) -> Iterator[NeighborChoice]:
        if index == len(order):
            yield NeighborChoice(tuple(picked))
            return
        copy = order[index]
        for subset in options[index]:
            added = [frozenset((copy, n)) for n in subset if frozenset((copy, n)) not in edges]
            for edge in added:
                edges.add(edge)
                degree.update(edge)
            if all(degree[v] <= 2 for edge in added for v in edge):
                picked.append((copy, subset))
                yield from walk(index + 1)
                picked.pop()
            for edge in added:
                edges.discard(edge)
                degree.subtract(edge)

    yield from walk(0)


def _expanded_members(edge: Edge, graph: nx.Graph, copies: RepeatCopySet) -> FrozenSet[Vertex]:
    inside = edge.members & frozenset(copies.copies)
    unique = edge.members - inside

    def absorbable(node: Vertex) -> bool:
        return copies.origin.get(node) in inside

    if unique:
        reached = set(unique)
        frontier = sorted(unique)
        while frontier:
            node = frontier.pop()
            if node not in graph:
                continue
            for neighbour in graph.neighbors(node):
                if neighbour not in reached and absorbable(neighbour):
                    reached.add(neighbour)
                    frontier.append(neighbour)
        return frozenset(reached)

    chains = graph.subgraph([n for n in graph if absorbable(n)])
    for chain in sorted(sorted(c) for c in nx.connected_components(chains)):
        if {copies.origin[c] for c in chain} == edge.members:
            return frozenset(chain)
    raise AmbiguousChain(f"no chain of copies realizes {edge.describe()}")


def expand(
    h: AssemblyHypergraph,
    f: NeighborChoice,
    copies: Optional[RepeatCopySet] = None,
) -> ExpandedHypergraph:
    """
    Build H_f: unique vertices and copies at multiplicity one, the f-edges,
    and every edge rewritten over the copies its chains reach.

    :raises AmbiguousChain: when some rewritten edge does not decode back to
        the edge it came from.
    """
    copies = copies or RepeatCopySet.of(h)
    f_edges = f.f_edges()
    graph = nx.Graph()
    graph.add_edges_from(tuple(sorted(e)) for e in f_edges)

    expanded = []
    for edge in h.edges:
        members = _expanded_members(edge, graph, copies)
        decoded = {copies.origin.get(v, v) for v in members}
        if decoded != edge.members:
            raise AmbiguousChain(
                f"{edge.describe()} expands to {{{','.join(sorted(members))}}} under {f.describe()}"
            )
        expanded.append((edge, Edge(members, edge.weight)))

    vertices = [v for v in h.vertices if v not in copies.copies] + list(copies.ordered)
    new_edges = [Edge(e) for e in f_edges] + [rewritten for _, rewritten in expanded]
    hf = AssemblyHypergraph({v: 1 for v in vertices}, tuple(new_edges))
    return ExpandedHypergraph(hf, f_edges, tuple(expanded), dict(copies.origin))


def decode_assembly(witness: Assembly, decode: Mapping[Vertex, Vertex]) -> Assembly:
    """Map copies to their repeat; lone copies are dropped when the repeat occurs elsewhere."""
    kept: List[Walk] = []
    lone: List[Vertex] = []
    for walk in witness.walks:
        if len(walk) == 1 and walk.vertices[0] in decode:
            lone.append(decode[walk.vertices[0]])
        else:
            kept.append(walk.decode(decode))
    present = Assembly(tuple(kept)).occurrences()
    for repeat in lone:
        if not present[repeat]:
            kept.append(Walk.linear(repeat))
            present[repeat] += 1
    return Assembly(tuple(kept))


def _choice_from_edges(f_edges: FrozenSet[FEdge], copies: RepeatCopySet) -> NeighborChoice:
    mapping = {copy: [] for copy in copies.ordered}
    for edge in f_edges:
        for end in edge:
            if end in mapping:
                mapping[end].extend(edge - {end})
    return NeighborChoice.from_mapping(mapping)


def _f_edge_graphs(h: AssemblyHypergraph, copies: RepeatCopySet) -> Iterator[FrozenSet[FEdge]]:
    """
    Distinct f-edge graphs, one per class of copy relabelings.

    The pair between two copies is decided by the earlier one. Copies of one
    repeat must have nondecreasing neighbourhood keys, and an adjacency
    touching a repeat must be backed by an f-edge once its repeats are done.
    """
    order = copies.ordered
    origin = copies.origin
    position = {copy: index for index, copy in enumerate(order)}
    pools = {
        copy: sorted(extended_neighbourhood(h, origin[copy], copies) - {copy}) for copy in order
    }

    last_position = {repeat: position[names[-1]] for repeat, names in copies.copies.items()}
    checks: Dict[int, List[Callable[[], bool]]] = {}
    for edge in h.adjacencies:
        left, right = edge.sorted_members()
        ends = [v for v in (left, right) if v in copies.copies]
        if not ends:
            continue
        due = max(last_position[r] for r in ends)
        if len(ends) == 1:
            repeat = ends[0]
            unique = right if left == repeat else left
            checks.setdefault(due, []).append(
                lambda u=unique, r=repeat: any(origin.get(n) == r for n in neighbours.get(u, ()))
            )
        else:
            checks.setdefault(due, []).append(
                lambda r=left, s=right: any(
                    origin.get(n) == s for c in copies.copies[r] for n in neighbours.get(c, ())
                )
            )

    neighbours: Dict[Vertex, Set[Vertex]] = {}
    edges: Set[FEdge] = set()

    def key(copy: Vertex):
        around = neighbours.get(copy, ())
        return (
            tuple(sorted(n for n in around if n not in origin)),
            tuple(sorted(origin[n] for n in around if n in origin)),
        )

    def link(a: Vertex, b: Vertex) -> None:
        edges.add(frozenset((a, b)))
        neighbours.setdefault(a, set()).add(b)
        neighbours.setdefault(b, set()).add(a)

    def unlink(a: Vertex, b: Vertex) -> None:
        edges.discard(frozenset((a, b)))
        neighbours[a].discard(b)
        neighbours[b].discard(a)

    def grow(index: int) -> Iterator[FrozenSet[FEdge]]:
        if index == len(order):
            yield frozenset(edges)
            return
        copy = order[index]
        previous = order[index - 1] if index else None
        free = 2 - len(neighbours.get(copy, ()))
        later = [n for n in pools[copy] if n not in position or position[n] > index]
        for size in range(free + 1):
            for extra in combinations(later, size):
                if any(len(neighbours.get(n, ())) >= 2 for n in extra):
                    continue
                for n in extra:
                    link(copy, n)
                same_repeat = previous is not None and origin[previous] == origin[copy]
                if (not same_repeat or key(previous) <= key(copy)) and all(
                    check() for check in checks.get(index, ())
                ):
                    yield from grow(index + 1)
                for n in extra:
                    unlink(copy, n)

    yield from grow(0)


def _batches(items: Iterator, size: int) -> Iterator[List]:
    while True:
        batch = list(islice(items, size))
        if not batch:
            return
        yield batch


def decide_fpt(
    h: AssemblyHypergraph,
    model: GenomeModel,
    settings: Optional[FptSettings] = None,
) -> Verdict:
    """
    Yes iff some neighbour choice yields an expansion the c1p engine accepts.

    The witness comes from the first accepting choice in enumeration order,
    also when choices are evaluated on several workers.
    """
    validate(h)
    ordered = [e.describe() for e in h.edges if e.is_ordered]
    if ordered:
        raise PreconditionViolated([f"ordered interval {o} needs spanning realization" for o in ordered])
    settings = settings or FptSettings()
    copies = RepeatCopySet.of(h)

    def evaluate(choice: NeighborChoice):
        try:
            expanded = expand(h, choice, copies)
        except AmbiguousChain as exc:
            logger.debug("Skipping choice: %s", exc)
            return None
        witness, _ = solve_c1p(expanded.hypergraph, model)
        if witness is None:
            return None
        return choice, decode_assembly(witness, expanded.decode)

    candidates = enumerate_choices(h, copies, reduced=True)
    examined = 0
    accepted: List[Tuple[NeighborChoice, Assembly]] = []

    def consume(outcomes) -> bool:
        nonlocal examined
        for outcome in outcomes:
            examined += 1
            if outcome is not None:
                accepted.append(outcome)
                if not settings.collect_all:
                    return True
        return False

    if settings.workers > 1:
        with ThreadPoolExecutor(max_workers=settings.workers) as pool:
            for batch in _batches(candidates, settings.workers * 8):
                if consume(pool.map(evaluate, batch)):
                    break
    else:
        consume(evaluate(choice) for choice in candidates)

    notes = [f"{examined} neighbour choices examined"]
    if not accepted:
        return certify(Verdict.no(ENGINE_NAME, notes), h, model)
    choice, witness = accepted[0]
    notes.append(f"accepted by {choice.describe() or 'the empty choice'}")
    if settings.collect_all:
        notes.append(f"{len(accepted)} accepting choices")
    return certify(Verdict.yes(witness, ENGINE_NAME, notes), h, model)


class FptEngine(DecisionEngine):
    name = ENGINE_NAME

    def __init__(self, settings: Optional[FptSettings] = None):
        self._settings = settings or FptSettings()

    def decide(self, h: AssemblyHypergraph, model: GenomeModel) -> Verdict:
        return decide_fpt(h, model, self._settings)

    def unsupported(self, h: AssemblyHypergraph) -> Tuple[str, ...]:
        return tuple(f"ordered interval {e.describe()}" for e in h.edges if e.is_ordered)
