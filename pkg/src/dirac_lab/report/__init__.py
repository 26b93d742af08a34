"""CSV and JSON reports."""

from .models import REPORT_VERSION, ExperimentReport, ReportKind
from .writer import FORMATS, ReportWriter, format_cell, sanitize

__all__ = [
    "FORMATS",
    "REPORT_VERSION",
    "ExperimentReport",
    "ReportKind",
    "ReportWriter",
    "format_cell",
    "sanitize",
]
