"""Random comparison of the triple algorithm against the exhaustive oracle."""

import logging
import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import List, Optional

from core.assembly import GenomeModel
from core.errors import PreconditionViolated
from core.hypergraph import AssemblyHypergraph, Edge
from engines.triples import maximize_triples, triple_compatible
from formats.hypergraph_format import hypergraph_digest
from oracle.enumeration import oracle_max_subset
from oracle.oracle_settings import OracleSettings
from reporting.base_log import Discrepancy, DiscrepancyLog
from reporting.memory_log import MemoryDiscrepancyLog

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SweepBounds:
    max_vertices: int = 5
    max_repeats: int = 2
    max_triples: int = 3
    max_weight: int = 3


@dataclass
class SweepSummary:
    examined: int = 0
    skipped: int = 0
    discrepancies: List[Discrepancy] = field(default_factory=list)


def random_triple_instance(rng: random.Random, bounds: SweepBounds) -> AssemblyHypergraph:
    """
    A connected-ish adjacency graph with up to ``max_repeats`` repeats of
    multiplicity two, plus triples that the adjacencies already walk through.
    """
    n = rng.randint(3, bounds.max_vertices)
    names = [f"v{i}" for i in range(n)]
    repeats = set(rng.sample(names, rng.randint(0, min(bounds.max_repeats, n))))
    multiplicity = {v: 2 if v in repeats else 1 for v in names}

    pairs = list(combinations(names, 2))
    adjacencies = [
        Edge.adjacency(u, v, rng.randint(1, bounds.max_weight))
        for u, v in rng.sample(pairs, rng.randint(n - 1, min(len(pairs), n + 1)))
    ]
    h_a = AssemblyHypergraph(multiplicity, tuple(adjacencies))

    candidates = [
        frozenset(t)
        for t in combinations(names, 3)
        if len(repeats.intersection(t)) <= 1 and triple_compatible(t, h_a)
    ]
    chosen = rng.sample(candidates, min(len(candidates), rng.randint(1, bounds.max_triples)))
    triples = [Edge.interval(t, rng.randint(1, bounds.max_weight)) for t in chosen]
    return h_a.with_edges(tuple(adjacencies) + tuple(triples))


def compare_with_oracle(
    h: AssemblyHypergraph, settings: Optional[OracleSettings] = None
) -> Optional[Discrepancy]:
    """
    None when both weights agree; the discrepancy otherwise.

    :raises PreconditionViolated: ``h`` is outside what the triple algorithm accepts.
    """
    optimum = maximize_triples(h, strict=True)
    _, best = oracle_max_subset(h, h.intervals, GenomeModel.MIXED, settings)
    if optimum.weight == best:
        return None
    return Discrepancy(hypergraph_digest(h), optimum.weight, best)


def run_triples_sweep(
    count: int,
    seed: int = 0,
    log: Optional[DiscrepancyLog] = None,
    bounds: Optional[SweepBounds] = None,
    settings: Optional[OracleSettings] = None,
) -> SweepSummary:
    """Draw ``count`` instances; instances failing the preconditions are skipped."""
    rng = random.Random(seed)
    log = log if log is not None else MemoryDiscrepancyLog()
    bounds = bounds or SweepBounds()
    summary = SweepSummary()
    for _ in range(count):
        h = random_triple_instance(rng, bounds)
        try:
            found = compare_with_oracle(h, settings)
        except PreconditionViolated as exc:
            logger.debug("Skipping %s: %s", hypergraph_digest(h), exc)
            summary.skipped += 1
            continue
        summary.examined += 1
        if found is not None:
            log.record(found)
            summary.discrepancies.append(found)
    logger.info(
        "Triples sweep: %s examined, %s skipped, %s discrepancies",
        summary.examined, summary.skipped, len(summary.discrepancies),
    )
    return summary
