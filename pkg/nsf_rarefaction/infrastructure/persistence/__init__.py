from .config_parser import parse_config, parse_config_text
from .csv_report_repository import CsvReportRepository

__all__ = ["parse_config", "parse_config_text", "CsvReportRepository"]
