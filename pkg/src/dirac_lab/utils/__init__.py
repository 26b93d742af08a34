"""Utility modules."""

from .logging import (
    get_console,
    log_error,
    log_info,
    log_metric,
    log_success,
    log_warning,
    print_table,
)

__all__ = [
    "get_console",
    "log_info",
    "log_success",
    "log_warning",
    "log_error",
    "log_metric",
    "print_table",
]
