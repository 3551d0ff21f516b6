import logging
from fractions import Fraction
from pathlib import Path
from typing import List, Optional

from core.hypergraph import Weight
from .base_log import Discrepancy, DiscrepancyLog
from .reporting_settings import ReportingSettings

logger = logging.getLogger(__name__)


def _weight(text: str) -> Weight:
    value = Fraction(text)
    return int(value) if value.denominator == 1 else value


class FileDiscrepancyLog(DiscrepancyLog):
    def __init__(self, settings: Optional[ReportingSettings] = None, path: Optional[str] = None):
        """
        Append-only text log, one ``<digest> <algorithm weight> <oracle weight>`` line per entry.

        :param settings: ReportingSettings naming the default log path.
        :param path: explicit path, overriding the settings.
        """
        self.settings = settings or ReportingSettings()
        self.path = Path(path or self.settings.discrepancy_log)
        logger.info("FileDiscrepancyLog writing to %s", self.path)

    def touch(self) -> None:
        """Create the file so an empty sweep still leaves a log behind."""
        self.path.parent.mkdir(parents=True, exist_ok=True)
        self.path.touch(exist_ok=True)

    def record(self, entry: Discrepancy) -> None:
        self.touch()
        with self.path.open("a", encoding="utf-8") as handle:
            handle.write(entry.render() + "\n")
        logger.warning(
            "Discrepancy on %s: algorithm %s, oracle %s",
            entry.digest,
            entry.algorithm_weight,
            entry.oracle_weight,
        )

    def entries(self) -> List[Discrepancy]:
        if not self.path.exists():
            return []
        found = []
        for line in self.path.read_text(encoding="utf-8").splitlines():
            parts = line.split()
            if len(parts) != 3:
                logger.warning("Skipping malformed discrepancy line %r", line)
                continue
            found.append(Discrepancy(parts[0], _weight(parts[1]), _weight(parts[2])))
        return found
