"""Utility modules for fbplab."""

from .logger import get_logger, setup_logging
from .response_formatter import ReportFormatter, emit_report, parse_report

__all__ = ['get_logger', 'setup_logging', 'ReportFormatter', 'emit_report', 'parse_report']
