from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import List

from core.hypergraph import Weight


@dataclass(frozen=True)
class Discrepancy:
    """An instance where the triple algorithm and the oracle disagree on weight."""

    digest: str
    algorithm_weight: Weight
    oracle_weight: Weight

    def render(self) -> str:
        return f"{self.digest} {Fraction(self.algorithm_weight)} {Fraction(self.oracle_weight)}"


class DiscrepancyLog(ABC):
    """Abstract sink for triple-algorithm discrepancies."""

    @abstractmethod
    def record(self, entry: Discrepancy) -> None:
        """Append one discrepancy."""
        raise NotImplementedError

    @abstractmethod
    def entries(self) -> List[Discrepancy]:
        """Every discrepancy recorded so far, oldest first."""
        raise NotImplementedError
