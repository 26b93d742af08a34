"""Log-log convergence fits and Richardson extrapolation."""

from collections.abc import Sequence

import numpy as np

from .models import ConvergenceFit

ZERO_ERROR_TOL = 1e-13


def fit_power_law(x: Sequence[float], y: Sequence[float]) -> tuple[float, float, float]:
    """Fit ``y = C x^p`` by least squares on ``(log x, log y)``.

    Returns
    -------
    tuple[float, float, float]
        Exponent ``p``, intercept ``log C`` and the coefficient of
        determination ``r^2`` of the log-log line.

    """
    log_x = np.log(np.asarray(x, dtype=np.float64))
    log_y = np.log(np.asarray(y, dtype=np.float64))
    slope, intercept = np.polyfit(log_x, log_y, 1)
    residual = log_y - (slope * log_x + intercept)
    total = np.sum((log_y - log_y.mean()) ** 2)
    r_squared = 1.0 - float(np.sum(residual**2) / total) if total > 0 else 1.0
    return float(slope), float(intercept), r_squared


def observed_orders(spacings: Sequence[float], errors: Sequence[float]) -> list[float]:
    """Per-step orders ``log(e_k / e_{k+1}) / log(a_k / a_{k+1})``."""
    orders = []
    for k in range(len(spacings) - 1):
        if errors[k] <= 0 or errors[k + 1] <= 0:
            orders.append(float("nan"))
            continue
        orders.append(
            float(
                np.log(errors[k] / errors[k + 1]) / np.log(spacings[k] / spacings[k + 1])
            )
        )
    return orders


def convergence_fit(
    spacings: Sequence[float], errors: Sequence[float], label: str = ""
) -> ConvergenceFit:
    """Fit the refinement order of ``errors`` over ``spacings``.

    Points with an error below ``1e-13`` are dropped; the fit is degenerate
    when fewer than two remain. Per-step orders are reported alongside.
    """
    spacings = [float(a) for a in spacings]
    errors = [float(e) for e in errors]
    steps = observed_orders(spacings, errors)
    usable = [(a, e) for a, e in zip(spacings, errors) if e > ZERO_ERROR_TOL]
    if len(usable) < 2:
        return ConvergenceFit(
            spacings=spacings,
            errors=errors,
            fitted_order=float("nan"),
            r_squared=float("nan"),
            degenerate=True,
            label=label,
            step_orders=steps,
        )
    xs, ys = zip(*usable)
    order, _, r_squared = fit_power_law(xs, ys)
    return ConvergenceFit(
        spacings=spacings,
        errors=errors,
        fitted_order=order,
        r_squared=r_squared,
        label=label,
        step_orders=steps,
    )


def richardson_table(values: Sequence[np.ndarray], ratio: float = 2.0) -> np.ndarray:
    """Richardson extrapolation of estimates with even-power error expansions.

    ``values[k]`` is computed at step ``h0 / ratio^k``. Column ``j`` removes
    the ``h^(2j)`` error term, so the last entry of the last row is the best
    estimate.

    Parameters
    ----------
    values : Sequence[np.ndarray]
        Estimates (scalars or arrays of one shape), coarsest first.
    ratio : float, optional
        Step reduction between consecutive levels (default=2.0).

    Returns
    -------
    np.ndarray
        Lower-triangular table of shape ``(K, K, *value_shape)``.

    """
    first = np.asarray(values[0], dtype=np.float64)
    levels = len(values)
    table = np.zeros((levels, levels, *first.shape), dtype=np.float64)
    for k, value in enumerate(values):
        table[k, 0] = value
        for j in range(1, k + 1):
            factor = ratio ** (2 * j)
            table[k, j] = table[k, j - 1] + (table[k, j - 1] - table[k - 1, j - 1]) / (
                factor - 1.0
            )
    return table
