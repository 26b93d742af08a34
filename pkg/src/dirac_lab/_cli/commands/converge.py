"""CLI command for the refinement studies."""

import sys
from typing import Any

import click
from dotenv import load_dotenv

from ...config import ConfigSchemaError, RunConfig
from ...gauge.transform import gradient_on_links
from ...lattice.models import CouplingScheme, LatticeConfig, LinkField
from ...report import ExperimentReport, ReportKind
from ...utils.logging import log_info, log_metric, log_warning, print_table
from ...verify import (
    CheckResult,
    ConvergenceFit,
    RefinementCase,
    bare_current_refinement,
    check_energy_shift_identity,
    coupling_scheme_refinement,
    energy_difference_refinement,
    vacuum_paradox_probe,
)
from ...verify.probes import CONSTANT_CHI_TOL
from ..utils import FORMAT_CHOICES, ExitCode, report_failure, resolve_run, write_report

# Load .env file at module import time (before Click processes envvars)
load_dotenv()

FIT_COLUMNS = ("study", "spacing", "error", "fitted_order", "r_squared")
MIN_LEVELS = 3
TARGET_ORDER = 1.0
TARGET_R_SQUARED = 0.99
RATIO_DRIFT_TOL = 0.05


def converge_run(
    run: RunConfig,
) -> tuple[list[ConvergenceFit], list[CheckResult], dict[str, Any]]:
    """Run every refinement study for ``run``.

    Returns
    -------
    tuple[list[ConvergenceFit], list[CheckResult], dict[str, Any]]
        Fits in a fixed order, the vacuum-energy probe (if ``chi`` is not
        constant) and summary scalars.

    Raises
    ------
    ConfigSchemaError
        If fewer than three spacings are requested.

    """
    if run.refinement < MIN_LEVELS:
        raise ConfigSchemaError(
            "refinement", f"converge needs at least {MIN_LEVELS} spacings"
        )
    case = RefinementCase(
        base=run.lattice,
        state=run.state_recipe(),
        chi=run.chi_recipe(),
        levels=run.refinement,
    )
    log_info(
        f"Refining a={run.lattice.spacing:g} over {case.levels} halvings "
        f"at L={run.lattice.length:g}"
    )

    study = check_energy_shift_identity(case)
    fits = [study.with_vacuum_term, study.without_vacuum_term]
    fits.append(bare_current_refinement(case))
    if CouplingScheme.LINEAR.value in run.schemes():
        fits.append(energy_difference_refinement(case))

    def gauge_field(cfg: LatticeConfig) -> LinkField:
        return gradient_on_links(case.chi(cfg), cfg)

    scheme_fit, scheme_constants = coupling_scheme_refinement(
        case.base, gauge_field, case.levels
    )
    fits.append(scheme_fit)

    shift_fit = study.with_vacuum_term
    first_order = (
        not shift_fit.degenerate
        and shift_fit.fitted_order >= TARGET_ORDER
        and shift_fit.r_squared >= TARGET_R_SQUARED
    )
    if not shift_fit.degenerate and not first_order:
        log_warning(
            f"shift - P fits order {shift_fit.fitted_order:.4f} "
            f"(r^2 {shift_fit.r_squared:.5f}); per-step orders "
            + ", ".join(f"{p:.3f}" for p in shift_fit.step_orders)
        )

    summary: dict[str, Any] = {
        "energy_shift": study.to_dict(),
        "plateau": study.vacuum_energies[-1],
        "plateau_deviation": study.plateau_deviation,
        "shift_first_order": first_order,
        "coupling_scheme_constants": scheme_constants,
    }

    probes: list[CheckResult] = []
    if case.chi(case.base).is_constant(CONSTANT_CHI_TOL):
        log_warning("Constant gauge function: every residual vanishes identically")
    else:
        probe, paradox_fit = vacuum_paradox_probe(case.chi, case.base, case.levels)
        probes.append(probe)
        fits.append(paradox_fit)
        drift = probe.extras["ratio_drift"]
        summary["vacuum_ratios"] = probe.extras["ratios"]
        summary["ratio_drift"] = drift
        summary["ratio_settled"] = drift <= RATIO_DRIFT_TOL
        if drift > RATIO_DRIFT_TOL:
            log_warning(
                f"P/(a sum grad^2) still drifts {drift:.2%} over the last two "
                f"spacings: " + ", ".join(f"{r:.4f}" for r in probe.extras["ratios"])
            )
    return fits, probes, summary


def _fit_rows(fits: list[ConvergenceFit]) -> list[dict[str, Any]]:
    return [
        {
            "study": fit.label,
            "spacing": spacing,
            "error": error,
            "fitted_order": fit.fitted_order,
            "r_squared": fit.r_squared,
        }
        for fit in fits
        for spacing, error in zip(fit.spacings, fit.errors)
    ]


def _print_fits(fits: list[ConvergenceFit]) -> None:
    rows = [
        (
            fit.label,
            "degenerate" if fit.degenerate else f"{fit.fitted_order:.3f}",
            "-" if fit.degenerate else f"{fit.r_squared:.4f}",
            f"{fit.errors[-1]:.3e}",
        )
        for fit in fits
    ]
    print_table("Refinement", ("study", "order", "r^2", "finest error"), rows)


def run_converge(
    config_path: str | None,
    seed: int | None = None,
    out: str | None = None,
    fmt: str | None = None,
) -> ExitCode:
    """Run the refinement studies and write the fit tables."""
    run = resolve_run(config_path, seed, out, fmt)
    fits, probes, summary = converge_run(run)
    _print_fits(fits)
    log_metric("P(chi) plateau", summary["plateau"])
    report = ExperimentReport(
        kind=ReportKind.CONVERGE,
        config=run.to_dict(),
        seed=run.seed,
        columns=FIT_COLUMNS,
        rows=_fit_rows(fits),
        checks=[probe.to_dict() for probe in probes],
        fits=[fit.to_dict() for fit in fits],
        summary=summary,
    )
    write_report(report, run)
    return ExitCode.OK


@click.command()
@click.option(
    "--config",
    "config_path",
    envvar="DIRAC_LAB_CONFIG",
    help="YAML run configuration (defaults built in)",
)
@click.option("--out", help="Output path prefix (overrides output.prefix)")
@click.option(
    "--seed",
    type=click.IntRange(0, 2**64 - 1),
    help="Seed for every random draw (overrides $DIRAC_LAB_SEED and the config)",
)
@click.option(
    "--format",
    "fmt",
    type=click.Choice(FORMAT_CHOICES),
    help="Report format (overrides output.formats)",
)
def converge(
    config_path: str | None, out: str | None, seed: int | None, fmt: str | None
) -> None:
    """Fit refinement orders of the gauge residuals and measure P(chi)."""
    try:
        code = run_converge(config_path, seed, out, fmt)
    except Exception as exc:
        code = report_failure(exc)
    sys.exit(int(code))
