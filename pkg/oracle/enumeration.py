"""
Exhaustive ground truth for small hypergraphs.

Only tight walks are enumerated: consecutive vertices lie in a common edge
(a circular walk also across its wrap) and differ, unless some order repeats
a vertex in place. Cutting a compatible assembly at every other pair keeps
it compatible, so tight assemblies decide every instance; they are also what
the golden counts refer to.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from core.assembly import Assembly, GenomeModel, Topology, Verdict, Walk, canonical_sequence
from core.compatibility import is_compatible
from core.errors import CapExceeded, PreconditionViolated
from core.hypergraph import AssemblyHypergraph, Edge, Vertex, Weight, validate
from oracle.oracle_settings import OracleSettings

logger = logging.getLogger(__name__)

ENGINE_NAME = "oracle"

MAX_CANDIDATES = 12


@dataclass(frozen=True)
class EnumerationBounds:
    model: GenomeModel = GenomeModel.LINEAR
    max_occurrences: Optional[int] = None
    max_sequences: Optional[int] = None
    require_cover: bool = True


def _check_cap(h: AssemblyHypergraph, settings: OracleSettings) -> None:
    total = sum(h.multiplicity.values())
    if total > settings.cap:
        raise CapExceeded(f"total multiplicity {total} exceeds the oracle cap {settings.cap}")


def _links(h: AssemblyHypergraph) -> Dict[Vertex, Set[Vertex]]:
    links: Dict[Vertex, Set[Vertex]] = {v: set() for v in h.vertices}
    for edge in h.edges:
        for v in edge.members:
            links[v].update(edge.members - {v})
        for a, b in zip(edge.order, edge.order[1:]):
            if a == b:
                links[a].add(a)
    return links


def tight_walks(h: AssemblyHypergraph, model: GenomeModel, max_length: int) -> List[Walk]:
    """Every canonical tight walk within the multiplicities, sorted."""
    links = _links(h)
    found: List[Walk] = []
    counts: Counter = Counter()
    sequence: List[Vertex] = []

    def record() -> None:
        seq = tuple(sequence)
        if seq <= seq[::-1]:
            found.append(Walk(seq, Topology.LINEAR))
        if model is not GenomeModel.MIXED:
            return
        if len(seq) == 1:
            if links[seq[0]]:
                found.append(Walk(seq, Topology.CIRCULAR))
        elif (len(seq) == 2 or seq[0] in links[seq[-1]]) and seq == canonical_sequence(seq, Topology.CIRCULAR):
            found.append(Walk(seq, Topology.CIRCULAR))

    def extend() -> None:
        record()
        if len(sequence) == max_length:
            return
        for nxt in sorted(links[sequence[-1]]):
            if counts[nxt] < h.c(nxt):
                sequence.append(nxt)
                counts[nxt] += 1
                extend()
                counts[nxt] -= 1
                sequence.pop()

    for start in h.vertices:
        sequence.append(start)
        counts[start] += 1
        extend()
        counts[start] -= 1
        sequence.pop()
    return sorted(found, key=Walk.sort_key)


def enumerate_assemblies(
    h: AssemblyHypergraph,
    bounds: Optional[EnumerationBounds] = None,
    settings: Optional[OracleSettings] = None,
) -> Iterator[Assembly]:
    """
    Stream canonical tight assemblies in lexicographic order.

    :raises CapExceeded: total multiplicity above the configured cap.
    """
    validate(h)
    settings = settings or OracleSettings()
    bounds = bounds or EnumerationBounds(require_cover=settings.require_cover)
    _check_cap(h, settings)

    limit = bounds.max_occurrences or sum(h.multiplicity.values())
    walks = tight_walks(h, bounds.model, limit)
    walk_counts = [Counter(w.vertices) for w in walks]
    last_index = {v: -1 for v in h.vertices}
    for index, walk in enumerate(walks):
        for v in walk.vertices:
            last_index[v] = index

    counts: Counter = Counter()
    chosen: List[Walk] = []

    def uncovered() -> List[Vertex]:
        return [v for v in h.vertices if not counts[v]] if bounds.require_cover else []

    def grow(start: int, used: int) -> Iterator[Assembly]:
        missing = uncovered()
        if not missing:
            yield Assembly(tuple(chosen))
        elif any(last_index[v] < start for v in missing):
            return
        if bounds.max_sequences is not None and len(chosen) >= bounds.max_sequences:
            return
        for index in range(start, len(walks)):
            need = walk_counts[index]
            if used + len(walks[index]) > limit:
                continue
            if any(counts[v] + k > h.c(v) for v, k in need.items()):
                continue
            chosen.append(walks[index])
            counts.update(need)
            yield from grow(index, used + len(walks[index]))
            counts.subtract(need)
            chosen.pop()

    yield from grow(0, 0)


def compatible_assemblies(
    h: AssemblyHypergraph,
    model: GenomeModel,
    settings: Optional[OracleSettings] = None,
) -> Iterator[Assembly]:
    settings = settings or OracleSettings()
    bounds = EnumerationBounds(model=model, require_cover=settings.require_cover)
    for assembly in enumerate_assemblies(h, bounds, settings):
        if is_compatible(assembly, h, model, require_cover=settings.require_cover):
            yield assembly


def oracle_count(h: AssemblyHypergraph, model: GenomeModel, settings: Optional[OracleSettings] = None) -> int:
    return sum(1 for _ in compatible_assemblies(h, model, settings))


def oracle_decide(
    h: AssemblyHypergraph,
    model: GenomeModel,
    settings: Optional[OracleSettings] = None,
) -> Verdict:
    """Yes with the first compatible assembly in canonical order, or No."""
    witness = next(compatible_assemblies(h, model, settings), None)
    if witness is None:
        verdict = Verdict.no(ENGINE_NAME)
    else:
        verdict = Verdict.yes(witness, ENGINE_NAME)
    logger.debug("oracle decided %s (%s model)", verdict.answer.value, model.value)
    return verdict


def oracle_max_subset(
    h: AssemblyHypergraph,
    candidates: Iterable[Edge],
    model: GenomeModel,
    settings: Optional[OracleSettings] = None,
) -> Tuple[Tuple[Edge, ...], Weight]:
    """
    Heaviest subset of ``candidates`` that, together with the other edges,
    still decides Yes. Ties prefer subsets holding earlier candidates.
    """
    pool = sorted(set(candidates), key=Edge.sort_key)
    if len(pool) > MAX_CANDIDATES:
        raise PreconditionViolated([f"{len(pool)} candidates exceed the limit of {MAX_CANDIDATES}"])
    missing = [e.describe() for e in pool if e not in h.edges]
    if missing:
        raise PreconditionViolated([f"candidate {m} is not an edge of the hypergraph" for m in missing])
    fixed = tuple(e for e in h.edges if e not in pool)

    subsets = []
    for size in range(len(pool) + 1):
        for subset in combinations(range(len(pool)), size):
            weight = sum((pool[i].weight for i in subset), 0)
            membership = tuple(0 if i in subset else 1 for i in range(len(pool)))
            subsets.append((-weight, membership, frozenset(subset)))
    subsets.sort(key=lambda item: (item[0], item[1]))

    infeasible: List[FrozenSet[int]] = []
    for negative_weight, _, subset in subsets:
        if any(bad <= subset for bad in infeasible):
            continue
        chosen = tuple(pool[i] for i in sorted(subset))
        if oracle_decide(h.with_edges(fixed + chosen), model, settings).is_yes:
            return chosen, -negative_weight
        infeasible.append(subset)
    raise PreconditionViolated(["the edges outside the candidate set admit no assembly"])
