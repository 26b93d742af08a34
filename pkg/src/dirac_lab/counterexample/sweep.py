"""Gauge functions built from a state's current divergence and the amplitude sweep.

For ``chi = f div<J>`` the first-order energy shift is

    E0 + a sum_l <J_l> (grad chi)_l = E0 - f a sum_i (div<J>)_i^2

by exact summation by parts, so the linear prediction decreases without
bound in ``f``. The sweep sets that prediction against the bounded lattice
model.
"""

from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor

import numpy as np
from scipy.optimize import root_scalar

from ..gauge.models import GaugeFunction
from ..gauge.transform import (
    apply_gauge,
    divergence_of_current,
    gradient_on_links,
    sg_energy,
)
from ..gaussian.models import CorrelationState, VacuumReference
from ..gaussian.state import free_energy, link_currents
from ..lattice.models import CouplingScheme, LatticeConfig, SingleParticleOperator
from ..utils.logging import log_info, log_warning
from .models import DegenerateConstructionError, SweepReport, SweepRow

DEGENERATE_TOL = 1e-12
CROSSOVER_FRACTION = 0.1
CROSSOVER_XTOL = 1e-12
CURVATURE_FRACTIONS = (0.01, 0.02, 0.05)


def build_chi_from_current(
    state: CorrelationState,
    f: float,
    config: LatticeConfig,
    strict: bool = True,
) -> GaugeFunction:
    """``chi_i = f (div<J>)_i`` for the given state.

    Parameters
    ----------
    state : CorrelationState
        State whose current divergence seeds the gauge function.
    f : float
        Amplitude.
    config : LatticeConfig
        Lattice geometry.
    strict : bool, optional
        Raise on a vanishing divergence (default=True); otherwise warn and
        return the zero function.

    Raises
    ------
    DegenerateConstructionError
        If ``max |div<J>| <= 1e-12`` and ``strict``.

    """
    div = divergence_of_current(state, config)
    if np.max(np.abs(div)) <= DEGENERATE_TOL:
        message = (
            f"current divergence of state '{state.label}' vanishes; the construction "
            "chi = f div<J> degenerates. Use a state with a localized current, e.g. "
            "the wavepacket recipe."
        )
        if strict:
            raise DegenerateConstructionError(message)
        log_warning(message)
    return GaugeFunction(chi=f * div, label=f"from_current(f={f:g})")


def predicted_energy(
    state: CorrelationState,
    chi: GaugeFunction,
    h0: SingleParticleOperator,
    vac: VacuumReference,
    config: LatticeConfig,
) -> float:
    """First-order energy after the gauge change: ``E0 + a sum <J> grad chi``."""
    currents = link_currents(state, config, vac)
    gradient = gradient_on_links(chi, config).values
    return free_energy(state, h0, vac) + config.spacing * float(currents @ gradient)


def closed_form_prediction(
    state: CorrelationState,
    f: float,
    h0: SingleParticleOperator,
    vac: VacuumReference,
    config: LatticeConfig,
) -> float:
    """``E0 - f a sum (div<J>)^2``, the summed-by-parts form of the prediction."""
    div = divergence_of_current(state, config)
    return free_energy(state, h0, vac) - f * config.spacing * float(div @ div)


def _sweep_row(
    state: CorrelationState,
    f: float,
    config: LatticeConfig,
    h0: SingleParticleOperator,
    vac: VacuumReference,
) -> SweepRow:
    chi = build_chi_from_current(state, f, config)
    transformed = apply_gauge(state, chi)
    prediction = predicted_energy(state, chi, h0, vac, config)
    transformed_free = free_energy(transformed, h0, vac)
    return SweepRow(
        f=float(f),
        linear_prediction=prediction,
        exact_peierls=sg_energy(
            transformed, chi, config, h0, vac, CouplingScheme.PEIERLS
        ),
        exact_linear=sg_energy(transformed, chi, config, h0, vac, CouplingScheme.LINEAR),
        transformed_free=transformed_free,
        gap=transformed_free - prediction,
    )


def sweep_f(
    state: CorrelationState,
    f_values: Sequence[float],
    config: LatticeConfig,
    h0: SingleParticleOperator,
    vac: VacuumReference,
    workers: int = 1,
) -> list[SweepRow]:
    """Evaluate every amplitude in ``f_values``; rows keep the input order.

    Raises
    ------
    ValueError
        If an amplitude is not finite.
    DegenerateConstructionError
        If the state's current divergence vanishes.

    """
    values = [float(f) for f in f_values]
    if not all(np.isfinite(values)):
        raise ValueError("sweep amplitudes must be finite")
    # Fail before spawning work when the construction is degenerate.
    build_chi_from_current(state, 0.0, config)
    if workers > 1 and len(values) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(
                pool.map(lambda f: _sweep_row(state, f, config, h0, vac), values)
            )
    return [_sweep_row(state, f, config, h0, vac) for f in values]


def gap_ratio(row: SweepRow, free: float) -> float:
    """``|gap| / |prediction - E0|``, taken as zero where the predicted shift vanishes."""
    shift = abs(row.linear_prediction - free)
    return abs(row.gap) / shift if shift > 0.0 else 0.0


def crossover_bracket(
    rows: Sequence[SweepRow], free: float
) -> tuple[float, float] | None:
    """Amplitudes enclosing the first crossing of the 10% threshold.

    The ratio vanishes at ``f = 0``, so zero opens the bracket when the first
    positive amplitude is already past the threshold.
    """
    lower = 0.0
    for row in sorted((row for row in rows if row.f > 0), key=lambda row: row.f):
        if gap_ratio(row, free) >= CROSSOVER_FRACTION:
            return lower, row.f
        lower = row.f
    return None


def crossover_scale(
    state: CorrelationState,
    rows: Sequence[SweepRow],
    config: LatticeConfig,
    h0: SingleParticleOperator,
    vac: VacuumReference,
) -> float | None:
    """Smallest ``f > 0`` where ``|gap| = 10% |prediction - E0|``.

    The sweep rows only bracket the crossing. Inside the bracket the root is
    located with Brent's method on freshly evaluated amplitudes, so ``f*``
    does not depend on the spacing of the sweep grid. Returns ``None`` when
    the sweep never reaches the threshold.
    """
    free = free_energy(state, h0, vac)
    bracket = crossover_bracket(rows, free)
    if bracket is None:
        return None
    lower, upper = bracket
    if lower == 0.0:
        log_info(
            f"Crossover lies below the first sweep amplitude {upper:g}; "
            "locating it by root finding"
        )

    def excess(f: float) -> float:
        if f == 0.0:
            return -CROSSOVER_FRACTION
        return gap_ratio(_sweep_row(state, f, config, h0, vac), free) - CROSSOVER_FRACTION

    result = root_scalar(
        excess, bracket=(lower, upper), method="brentq", xtol=CROSSOVER_XTOL
    )
    return float(result.root)


def fit_gap_curvature(rows: Sequence[SweepRow]) -> float | None:
    """Least-squares ``c`` in ``gap ~ c f^2`` over the nonzero amplitudes."""
    f = np.array([row.f for row in rows if row.f != 0.0])
    if f.size == 0:
        return None
    gap = np.array([row.gap for row in rows if row.f != 0.0])
    return float((f**2 @ gap) / (f**2 @ f**2))


def small_amplitude_rows(
    state: CorrelationState,
    rows: Sequence[SweepRow],
    crossover: float | None,
    config: LatticeConfig,
    h0: SingleParticleOperator,
    vac: VacuumReference,
) -> list[SweepRow]:
    """Rows deep in the quadratic regime of the gap.

    With a crossover the amplitudes are fixed fractions of ``f*``; without one
    the whole sweep stays below the threshold and its nonzero rows are used.
    """
    if crossover is None:
        return [row for row in rows if row.f != 0.0]
    return [
        _sweep_row(state, fraction * crossover, config, h0, vac)
        for fraction in CURVATURE_FRACTIONS
    ]


def run_sweep(
    state: CorrelationState,
    f_values: Sequence[float],
    config: LatticeConfig,
    h0: SingleParticleOperator,
    vac: VacuumReference,
    workers: int = 1,
) -> SweepReport:
    """Sweep and summarize: crossover scale, boundedness floor, gap curvature."""
    rows = sweep_f(state, f_values, config, h0, vac, workers=workers)
    free = free_energy(state, h0, vac)
    div = divergence_of_current(state, config)
    floor = min(
        (min(row.transformed_free, row.exact_peierls) for row in rows),
        default=0.0,
    )
    crossover = crossover_scale(state, rows, config, h0, vac)
    small = small_amplitude_rows(state, rows, crossover, config, h0, vac)
    return SweepReport(
        rows=rows,
        free_energy=free,
        divergence_norm=config.spacing * float(div @ div),
        crossover=crossover,
        floor=floor,
        gap_curvature=fit_gap_curvature(small),
        extras={"curvature_amplitudes": [row.f for row in small]},
    )
