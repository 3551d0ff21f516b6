import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from core.assembly import Assembly, GenomeModel, Walk
from core.hypergraph import AssemblyHypergraph, Edge

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Violation:
    kind: str
    subject: str
    message: str


@dataclass(frozen=True)
class CompatibilityReport:
    violations: Tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def first(self) -> Optional[Violation]:
        return self.violations[0] if self.violations else None

    def __bool__(self) -> bool:
        return self.ok


def _has_set_window(walk: Walk, edge: Edge) -> bool:
    members = edge.members
    seq = walk.vertices
    if walk.is_circular:
        if all(v in members for v in seq):
            return set(seq) == members
        # rotate so the walk starts outside the edge; runs then never wrap
        start = next(i for i, v in enumerate(seq) if v not in members)
        seq = seq[start:] + seq[:start]
    run = set()
    for vertex in seq:
        if vertex in members:
            run.add(vertex)
            if len(run) == len(members):
                return True
        else:
            run = set()
    return False


def _has_ordered_window(walk: Walk, order: Tuple[str, ...]) -> bool:
    seq = walk.vertices
    size = len(order)
    if size > len(seq):
        return False
    targets = {order, order[::-1]}
    if walk.is_circular:
        doubled = seq + seq
        return any(doubled[i:i + size] in targets for i in range(len(seq)))
    return any(seq[i:i + size] in targets for i in range(len(seq) - size + 1))


def edge_is_realized(assembly: Assembly, edge: Edge) -> bool:
    if edge.order:
        return any(_has_ordered_window(w, edge.order) for w in assembly.walks)
    return any(_has_set_window(w, edge) for w in assembly.walks)


def is_compatible(
    assembly: Assembly,
    h: AssemblyHypergraph,
    model: GenomeModel,
    require_cover: bool = True,
) -> CompatibilityReport:
    """
    Check ``assembly`` against every edge and multiplicity of ``h``.

    All violations are collected; ``report.first`` is the first one found,
    in the order model, vertices (sorted), edges (sorted).
    """
    violations = []
    if model is GenomeModel.LINEAR:
        for walk in assembly.circular:
            violations.append(
                Violation("circular", walk.render(), "circular sequence in the linear model")
            )

    counts = assembly.occurrences()
    for vertex in sorted(set(counts) - set(h.multiplicity)):
        violations.append(Violation("unknown-vertex", vertex, f"{vertex} is not a vertex of the hypergraph"))

    for vertex, mult in h.multiplicity.items():
        seen = counts.get(vertex, 0)
        if seen > mult:
            violations.append(
                Violation("multiplicity", vertex, f"{vertex} appears {seen} times, multiplicity is {mult}")
            )
        elif require_cover and seen == 0:
            violations.append(Violation("uncovered", vertex, f"{vertex} does not appear in the assembly"))

    for edge in h.edges:
        if not edge_is_realized(assembly, edge):
            violations.append(Violation("edge", edge.describe(), f"no window realizes {edge.describe()}"))

    report = CompatibilityReport(tuple(violations))
    if not report.ok:
        logger.debug("Assembly incompatible: %s", report.first.message)
    return report
