from dataclasses import dataclass, field
import os


@dataclass(frozen=True)
class ReportingSettings:
    """Where triple-algorithm discrepancies are written."""

    discrepancy_log: str = field(
        default_factory=lambda: os.getenv("MC1P_DISCREPANCY_LOG", "triples_discrepancies.log")
    )
