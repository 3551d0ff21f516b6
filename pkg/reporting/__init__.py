from .base_log import Discrepancy, DiscrepancyLog
from .file_log import FileDiscrepancyLog
from .memory_log import MemoryDiscrepancyLog
from .reporting_settings import ReportingSettings

__all__ = [
    "Discrepancy",
    "DiscrepancyLog",
    "FileDiscrepancyLog",
    "MemoryDiscrepancyLog",
    "ReportingSettings",
]
