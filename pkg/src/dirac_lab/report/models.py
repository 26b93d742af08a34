"""Data model for run reports."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any

REPORT_VERSION = 1


class ReportKind(str, Enum):
    """Subcommand that produced the report."""

    VERIFY = "verify"
    SWEEP = "sweep"
    CONVERGE = "converge"


@dataclass
class ExperimentReport:
    """Labeled scalar results of one run, ready for CSV and JSON.

    ``rows`` are the tabular part written to CSV in ``columns`` order;
    everything else only appears in the JSON document.

    Parameters
    ----------
    kind : ReportKind
        Producing subcommand.
    config : dict[str, Any]
        Resolved run configuration.
    seed : int
        Seed every random draw derived from.
    columns : tuple[str, ...]
        CSV header.
    rows : list[dict[str, Any]]
        One mapping per CSV row, keyed by ``columns``.
    checks : list[dict[str, Any]]
        Serialized check and probe results.
    fits : list[dict[str, Any]]
        Serialized convergence fits.
    summary : dict[str, Any]
        Derived scalars (crossover, exit status, counts).

    """

    kind: ReportKind
    config: dict[str, Any]
    seed: int
    columns: tuple[str, ...]
    rows: list[dict[str, Any]] = field(default_factory=list)
    checks: list[dict[str, Any]] = field(default_factory=list)
    fits: list[dict[str, Any]] = field(default_factory=list)
    summary: dict[str, Any] = field(default_factory=dict)

    def __post_init__(self) -> None:
        """Reject rows that do not match the header."""
        for index, row in enumerate(self.rows):
            missing = [c for c in self.columns if c not in row]
            if missing:
                raise ValueError(f"row {index} is missing columns {missing}")

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return {
            "version": REPORT_VERSION,
            "kind": self.kind.value,
            "config": self.config,
            "seed": self.seed,
            "columns": list(self.columns),
            "rows": self.rows,
            "checks": self.checks,
            "fits": self.fits,
            "summary": self.summary,
        }
