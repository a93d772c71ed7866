from .repositories import ReportRepository
from .value_objects import RateEstimate

__all__ = ["ReportRepository", "RateEstimate"]
