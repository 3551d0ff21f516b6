from dataclasses import dataclass, field
import os


@dataclass(frozen=True)
class FptSettings:
    """Configuration for the neighbour-choice enumeration engine."""

    workers: int = field(default_factory=lambda: int(os.getenv("MC1P_FPT_WORKERS", "1")))
    collect_all: bool = field(
        default_factory=lambda: os.getenv("MC1P_FPT_COLLECT_ALL", "false").lower() == "true"
    )
