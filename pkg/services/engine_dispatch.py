import logging
from typing import Callable, Dict, Optional, Tuple

from core.assembly import GenomeModel, Verdict
from core.errors import PreconditionViolated
from core.hypergraph import AssemblyHypergraph, validate
from engines.adjacency import AdjacencyEngine
from engines.base_engine import DecisionEngine
from engines.c1p import C1PEngine
from engines.fpt import FptEngine
from engines.fpt_settings import FptSettings
from engines.spanning import SpanningEngine

logger = logging.getLogger(__name__)

AUTO = "auto"


class EngineDispatcher:
    """Resolves an engine by name, or picks one from the shape of the hypergraph."""

    def __init__(self, fpt_settings: Optional[FptSettings] = None):
        self._fpt_settings = fpt_settings or FptSettings()
        self._factories: Dict[str, Callable[[], DecisionEngine]] = {
            C1PEngine.name: C1PEngine,
            AdjacencyEngine.name: AdjacencyEngine,
            FptEngine.name: lambda: FptEngine(self._fpt_settings),
            SpanningEngine.name: SpanningEngine,
        }

    @property
    def names(self) -> Tuple[str, ...]:
        return (AUTO,) + tuple(self._factories)

    def engine(self, name: str) -> DecisionEngine:
        if name not in self._factories:
            raise KeyError(f"unknown engine {name!r}; expected one of {', '.join(self.names)}")
        return self._factories[name]()

    def select(self, h: AssemblyHypergraph) -> str:
        """
        Repeat-free instances go to c1p, adjacency-only ones to the adjacency
        engine, ordered spanning instances to the spanning engine, the rest to fpt.
        """
        stats = validate(h)
        if stats.max_multiplicity <= 1:
            return C1PEngine.name
        if h.is_adjacency_graph():
            return AdjacencyEngine.name
        if h.has_ordered_intervals() and self.engine(SpanningEngine.name).supports(h):
            return SpanningEngine.name
        return FptEngine.name

    def decide(self, h: AssemblyHypergraph, model: GenomeModel, name: str = AUTO) -> Verdict:
        chosen = self.select(h) if name == AUTO else name
        engine = self.engine(chosen)
        reasons = engine.unsupported(h)
        if reasons:
            raise PreconditionViolated(reasons)
        logger.debug("Dispatching to %s engine (requested %s)", chosen, name)
        return engine.decide(h, model)
