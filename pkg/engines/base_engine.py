import logging
from abc import ABC, abstractmethod
from typing import Tuple

from core.assembly import GenomeModel, Verdict
from core.compatibility import is_compatible
from core.errors import WitnessRejected
from core.hypergraph import AssemblyHypergraph

logger = logging.getLogger(__name__)


class DecisionEngine(ABC):
    """Defines the contract for engines that decide whether a hypergraph is assemblable."""

    name: str = ""

    @abstractmethod
    def decide(self, h: AssemblyHypergraph, model: GenomeModel) -> Verdict:
        """Return a Yes verdict with a compatible witness, or No."""
        raise NotImplementedError

    def unsupported(self, h: AssemblyHypergraph) -> Tuple[str, ...]:
        """Reasons this engine cannot decide ``h``; empty when it can."""
        return ()

    def supports(self, h: AssemblyHypergraph) -> bool:
        return not self.unsupported(h)


def certify(verdict: Verdict, h: AssemblyHypergraph, model: GenomeModel) -> Verdict:
    """Raise WitnessRejected unless a Yes witness is compatible with ``h``."""
    if verdict.is_yes:
        report = is_compatible(verdict.witness, h, model)
        if not report.ok:
            raise WitnessRejected(
                f"{verdict.engine or 'engine'} witness rejected: {report.first.message}"
            )
    logger.info("%s decided %s (%s model)", verdict.engine or "engine", verdict.answer.value, model.value)
    return verdict
