"""
Decision for extremity encodings with alternating witnesses.

Every marker occurrence is a piece m.t-m.h. Inferred adjacencies are dealt
to extremity copies, at most one per copy, which links pieces into paths and
cycles. Cycles are opened by exchanging inferred adjacencies between two
copies of one extremity that sit in different components.
"""

import logging
from typing import Dict, List, Optional, Tuple

import networkx as nx

from core.assembly import Assembly, GenomeModel, Verdict, Walk
from engines.base_engine import certify
from formats.extremities import ExtremityEncoding

logger = logging.getLogger(__name__)

ENGINE_NAME = "oriented"

Copy = Tuple[str, int]


def inferred_degree_violations(enc: ExtremityEncoding) -> List[str]:
    degree: Dict[str, int] = {}
    for edge in enc.inferred:
        for end in edge.members:
            degree[end] = degree.get(end, 0) + 1
    h = enc.hypergraph
    return [
        f"{x} carries {d} inferred adjacencies but its marker has multiplicity {h.c(x)}"
        for x, d in sorted(degree.items())
        if d > h.c(x)
    ]


def free_slot_violations(enc: ExtremityEncoding) -> List[str]:
    """Components of the extremity graph where every extremity copy is taken."""
    h = enc.hypergraph
    graph = nx.Graph()
    graph.add_nodes_from(h.vertices)
    graph.add_edges_from(e.sorted_members() for e in h.edges)
    degree = {x: 0 for x in h.vertices}
    for edge in enc.inferred:
        for end in edge.members:
            degree[end] += 1
    reasons = []
    for component in nx.connected_components(graph):
        if sum(h.c(x) - degree[x] for x in component) <= 0:
            reasons.append(f"component {{{','.join(sorted(component))}}} has no free extremity")
    return sorted(reasons)


class _PieceLayout:
    """Extremity copies (x, i), the piece partner of each, and inferred links."""

    def __init__(self, enc: ExtremityEncoding):
        self._enc = enc
        self.partner: Dict[Copy, Copy] = {}
        self.copies: Dict[str, List[Copy]] = {
            x: [(x, i) for i in range(enc.hypergraph.c(x))] for x in enc.hypergraph.vertices
        }
        used = {x: 0 for x in enc.hypergraph.vertices}
        for edge in enc.inferred:
            a, b = edge.sorted_members()
            left, right = (a, used[a]), (b, used[b])
            used[a] += 1
            used[b] += 1
            self.partner[left] = right
            self.partner[right] = left

    def mate(self, copy: Copy) -> Copy:
        return self._enc.mate(copy[0]), copy[1]

    def graph(self) -> nx.Graph:
        graph = nx.Graph()
        for copies in self.copies.values():
            for copy in copies:
                graph.add_edge(copy, self.mate(copy))
        graph.add_edges_from(self.partner.items())
        return graph

    def swap(self, a: Copy, b: Copy) -> None:
        pa, pb = self.partner.pop(a, None), self.partner.pop(b, None)
        if pa is not None:
            self.partner[b] = pa
            self.partner[pa] = b
        if pb is not None:
            self.partner[a] = pb
            self.partner[pb] = a

    def open_cycles(self) -> None:
        while True:
            graph = self.graph()
            components = sorted(sorted(c) for c in nx.connected_components(graph))
            where = {copy: index for index, c in enumerate(components) for copy in c}
            cycles = [c for c in components if all(graph.degree(n) == 2 for n in c)]
            move = self._find_swap(cycles, where)
            if move is None:
                return
            self.swap(*move)

    def _find_swap(self, cycles: List[List[Copy]], where: Dict[Copy, int]) -> Optional[Tuple[Copy, Copy]]:
        for cycle in cycles:
            for copy in cycle:
                for other in self.copies[copy[0]]:
                    if where[other] != where[copy]:
                        return copy, other
        return None

    def walks(self) -> List[Walk]:
        graph = self.graph()
        walks = []
        for component in sorted(sorted(c) for c in nx.connected_components(graph)):
            ends = [n for n in component if graph.degree(n) == 1]
            start = ends[0] if ends else component[0]
            order = [start]
            current = start
            # leave every copy through its piece mate first, then through its link
            step_to_mate = True
            while True:
                nxt = self.mate(current) if step_to_mate else self.partner.get(current)
                step_to_mate = not step_to_mate
                if nxt is None or nxt == start:
                    break
                order.append(nxt)
                current = nxt
            names = tuple(copy[0] for copy in order)
            walks.append(Walk(names) if ends else Walk.circular(*names))
        return walks


def _drop_spare_pieces(walks: List[Walk], enc: ExtremityEncoding) -> List[Walk]:
    """Bare m.t-m.h pieces are kept only for markers that occur nowhere else."""
    linked = [w for w in walks if len(w) > 2]
    present = {enc.marker_of[x] for w in linked for x in w.vertices}
    kept = list(linked)
    for walk in walks:
        if len(walk) > 2:
            continue
        marker = enc.marker_of[walk.vertices[0]]
        if marker not in present:
            kept.append(walk)
            present.add(marker)
    return kept


def decide_oriented(enc: ExtremityEncoding, model: GenomeModel) -> Verdict:
    """
    Mixed: yes iff no extremity carries more inferred adjacencies than its
    marker has copies. Linear: additionally every component of the extremity
    graph keeps a free extremity copy.
    """
    reasons = inferred_degree_violations(enc)
    if not reasons and model is GenomeModel.LINEAR:
        reasons = free_slot_violations(enc)
    if reasons:
        return certify(Verdict.no(ENGINE_NAME, reasons), enc.hypergraph, model)

    layout = _PieceLayout(enc)
    layout.open_cycles()
    walks = _drop_spare_pieces(layout.walks(), enc)
    if model is GenomeModel.LINEAR and any(w.is_circular for w in walks):
        logger.warning("Cycles survived opening although every component has a free extremity")
        return certify(Verdict.no(ENGINE_NAME, ["a cycle of markers could not be opened"]), enc.hypergraph, model)
    return certify(Verdict.yes(Assembly(tuple(walks)), ENGINE_NAME), enc.hypergraph, model)
