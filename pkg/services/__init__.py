"""Service layer exports."""

from .engine_dispatch import AUTO, EngineDispatcher
from .sweep import SweepBounds, SweepSummary, compare_with_oracle, random_triple_instance, run_triples_sweep

__all__ = [
    "AUTO",
    "EngineDispatcher",
    "SweepBounds",
    "SweepSummary",
    "compare_with_oracle",
    "random_triple_instance",
    "run_triples_sweep",
]
