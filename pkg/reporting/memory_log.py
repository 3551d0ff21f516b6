import logging
from typing import List

from .base_log import Discrepancy, DiscrepancyLog

logger = logging.getLogger(__name__)


class MemoryDiscrepancyLog(DiscrepancyLog):
    """In-memory discrepancy log."""

    def __init__(self):
        self.store: List[Discrepancy] = []

    def record(self, entry: Discrepancy) -> None:
        logger.debug("Recording discrepancy for %s in memory.", entry.digest)
        self.store.append(entry)

    def entries(self) -> List[Discrepancy]:
        return list(self.store)
