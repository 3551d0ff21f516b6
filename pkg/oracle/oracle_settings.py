from dataclasses import dataclass, field
import os


@dataclass(frozen=True)
class OracleSettings:
    """Limits for the exhaustive assembly oracle."""

    cap: int = field(default_factory=lambda: int(os.getenv("MC1P_ORACLE_CAP", "9")))
    require_cover: bool = field(
        default_factory=lambda: os.getenv("MC1P_ORACLE_REQUIRE_COVER", "true").lower() == "true"
    )
