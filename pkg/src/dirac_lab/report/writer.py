"""Report writers.

Both formats are deterministic: fixed column order, floats at 17
significant digits in CSV, ``indent=2`` JSON with non-finite numbers
written as ``null``.
"""

import csv
import json
import math
import os
from collections.abc import Iterable
from typing import Any

import numpy as np

from ..utils.logging import log_success
from .models import ExperimentReport

FORMATS = ("csv", "json")


def sanitize(value: Any) -> Any:
    """Convert numpy types to plain Python and non-finite floats to ``None``."""
    if isinstance(value, dict):
        return {str(k): sanitize(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [sanitize(v) for v in value]
    if isinstance(value, np.ndarray):
        return sanitize(value.tolist())
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return value if math.isfinite(value) else None
    return value


def format_cell(value: Any) -> str:
    """Render one CSV cell."""
    if value is None:
        return ""
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return f"{float(value):.17g}"
    return str(value)


def _ensure_parent(filepath: str) -> None:
    parent = os.path.dirname(filepath)
    if parent:
        os.makedirs(parent, exist_ok=True)


class ReportWriter:
    """Write :class:`ExperimentReport` objects to disk."""

    @staticmethod
    def save_json(report: ExperimentReport, filepath: str) -> None:
        """Save the full report as JSON.

        Parameters
        ----------
        report : ExperimentReport
            Report to save.
        filepath : str
            Destination path.

        Notes
        -----
        Creates parent directories if they don't exist.

        """
        _ensure_parent(filepath)
        with open(filepath, "w", encoding="utf-8") as f:
            json.dump(sanitize(report.to_dict()), f, indent=2, allow_nan=False)
            f.write("\n")
        log_success(f"Report saved to {filepath}")

    @staticmethod
    def save_csv(report: ExperimentReport, filepath: str) -> None:
        """Save the report rows as CSV with a header line."""
        _ensure_parent(filepath)
        with open(filepath, "w", encoding="utf-8", newline="") as f:
            writer = csv.writer(f, lineterminator="\n")
            writer.writerow(report.columns)
            for row in report.rows:
                writer.writerow([format_cell(row[c]) for c in report.columns])
        log_success(f"Rows saved to {filepath}")

    @classmethod
    def write(
        cls, report: ExperimentReport, prefix: str, formats: Iterable[str]
    ) -> list[str]:
        """Write ``<prefix>.<fmt>`` for every requested format.

        Returns
        -------
        list[str]
            Paths written, in ``FORMATS`` order.

        Raises
        ------
        ValueError
            On an unknown format.
        OSError
            If a destination cannot be written.

        """
        requested = set(formats)
        unknown = requested - set(FORMATS)
        if unknown:
            raise ValueError(f"unknown report formats: {sorted(unknown)}")
        paths = []
        for fmt in FORMATS:
            if fmt not in requested:
                continue
            path = f"{prefix}.{fmt}"
            if fmt == "csv":
                cls.save_csv(report, path)
            else:
                cls.save_json(report, path)
            paths.append(path)
        return paths
