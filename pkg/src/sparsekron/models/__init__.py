from .report import REPORT_SCHEMA_VERSION, InterpolationReport, RoundReport
from .run_config import RunConfig

__all__ = [
    "REPORT_SCHEMA_VERSION",
    "InterpolationReport",
    "RoundReport",
    "RunConfig",
]
