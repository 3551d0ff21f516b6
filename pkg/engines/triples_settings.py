from dataclasses import dataclass, field
import os


@dataclass(frozen=True)
class TriplesSettings:
    """Configuration for the triple contraction optimizer."""

    strict: bool = field(
        default_factory=lambda: os.getenv("MC1P_TRIPLES_STRICT", "true").lower() == "true"
    )
