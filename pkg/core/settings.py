from dataclasses import dataclass, field
import os


@dataclass(frozen=True)
class RuntimeSettings:
    """Process-wide runtime configuration shared by every entry point."""

    log_level: str = field(default_factory=lambda: os.getenv("LOG_LEVEL", "INFO"))

    def resolved_level(self) -> str:
        return (self.log_level or "INFO").upper()
