"""Data models for the current-divergence gauge construction and its sweep."""

from dataclasses import dataclass, field
from typing import Any

CSV_COLUMNS = (
    "f",
    "linear_prediction",
    "exact_peierls",
    "exact_linear",
    "transformed_free",
    "gap",
)


class DegenerateConstructionError(ValueError):
    """The state's current divergence vanishes, so ``chi = f div<J>`` is zero."""


@dataclass(frozen=True)
class SweepRow:
    """One amplitude point of the sweep.

    Parameters
    ----------
    f : float
        Amplitude in ``chi = f div<J>``.
    linear_prediction : float
        ``E0 + a sum <J> grad chi``, equal to ``E0 - f a sum (div<J>)^2``.
    exact_peierls : float
        Observer ``S_g`` energy of the transformed state, Peierls coupling.
        Normal-ordered against the observer's own vacuum, this equals ``E0``
        at every ``f``; any deviation is a broken covariance identity.
    exact_linear : float
        Same with the literal linear coupling.
    transformed_free : float
        Free energy of the gauge-transformed state.
    gap : float
        ``transformed_free - linear_prediction``.

    """

    f: float
    linear_prediction: float
    exact_peierls: float
    exact_linear: float
    transformed_free: float
    gap: float

    def to_dict(self) -> dict[str, float]:
        """Convert to dictionary in CSV column order."""
        return {name: float(getattr(self, name)) for name in CSV_COLUMNS}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "SweepRow":
        """Create from dictionary."""
        return cls(**{name: float(data[name]) for name in CSV_COLUMNS})


@dataclass
class SweepReport:
    """Sweep rows plus the derived crossover and boundedness figures."""

    rows: list[SweepRow]
    free_energy: float
    divergence_norm: float
    crossover: float | None = None
    floor: float = 0.0
    gap_curvature: float | None = None
    extras: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return {
            "free_energy": self.free_energy,
            "divergence_norm": self.divergence_norm,
            "crossover": self.crossover,
            "floor": self.floor,
            "gap_curvature": self.gap_curvature,
            "rows": [row.to_dict() for row in self.rows],
            **self.extras,
        }
