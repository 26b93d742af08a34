"""Current-divergence gauge construction and the amplitude sweep."""

from .models import CSV_COLUMNS, DegenerateConstructionError, SweepReport, SweepRow
from .sweep import (
    build_chi_from_current,
    closed_form_prediction,
    crossover_bracket,
    crossover_scale,
    fit_gap_curvature,
    gap_ratio,
    predicted_energy,
    run_sweep,
    small_amplitude_rows,
    sweep_f,
)

__all__ = [
    "CSV_COLUMNS",
    "DegenerateConstructionError",
    "SweepReport",
    "SweepRow",
    "build_chi_from_current",
    "closed_form_prediction",
    "crossover_bracket",
    "crossover_scale",
    "fit_gap_curvature",
    "gap_ratio",
    "predicted_energy",
    "run_sweep",
    "small_amplitude_rows",
    "sweep_f",
]
