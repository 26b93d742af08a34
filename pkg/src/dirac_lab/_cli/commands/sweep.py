"""CLI command for the current-divergence amplitude sweep."""

import sys

import click
from dotenv import load_dotenv

from ...config import RunConfig
from ...counterexample import CSV_COLUMNS, SweepReport, run_sweep
from ...gaussian.state import free_theory
from ...report import ExperimentReport, ReportKind
from ...utils.logging import log_info, log_metric, log_warning
from ..utils import FORMAT_CHOICES, ExitCode, report_failure, resolve_run, write_report

# Load .env file at module import time (before Click processes envvars)
load_dotenv()


def sweep_run(run: RunConfig) -> SweepReport:
    """Build the configured state and sweep ``chi = f div<J>`` over the amplitudes.

    Raises
    ------
    DegenerateConstructionError
        If the state's current divergence vanishes (e.g. the vacuum).

    """
    config = run.lattice
    h0, vac, _ = free_theory(config)
    state = run.state_recipe()(config, h0, vac)
    amplitudes = run.sweep.amplitudes()
    log_info(
        f"Sweeping {len(amplitudes)} amplitudes on {state.label} "
        f"(N={config.n_sites}, workers={run.sweep.workers})"
    )
    return run_sweep(state, amplitudes, config, h0, vac, workers=run.sweep.workers)


def build_sweep_report(run: RunConfig, result: SweepReport) -> ExperimentReport:
    """Assemble the sweep report; rows follow the fixed CSV column order."""
    summary = result.to_dict()
    summary.pop("rows")
    return ExperimentReport(
        kind=ReportKind.SWEEP,
        config=run.to_dict(),
        seed=run.seed,
        columns=CSV_COLUMNS,
        rows=[row.to_dict() for row in result.rows],
        summary=summary,
    )


def run_sweep_command(
    config_path: str | None,
    seed: int | None = None,
    out: str | None = None,
    fmt: str | None = None,
) -> ExitCode:
    """Run the sweep and write its report."""
    run = resolve_run(config_path, seed, out, fmt)
    result = sweep_run(run)
    log_metric("free energy", result.free_energy)
    log_metric("a sum (div<J>)^2", result.divergence_norm)
    log_metric("boundedness floor", result.floor)
    if result.gap_curvature is not None:
        log_metric("gap curvature", result.gap_curvature)
    if result.crossover is None:
        log_warning("Gap never reached 10% of the predicted shift; widen sweep.stop")
    else:
        log_metric("crossover f*", result.crossover)
    write_report(build_sweep_report(run, result), run)
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
def sweep(
    config_path: str | None, out: str | None, seed: int | None, fmt: str | None
) -> None:
    """Sweep the gauge function chi = f div<J> and tabulate the energies.

    Columns: f, linear_prediction, exact_peierls, exact_linear,
    transformed_free, gap.
    """
    try:
        code = run_sweep_command(config_path, seed, out, fmt)
    except Exception as exc:
        code = report_failure(exc)
    sys.exit(int(code))
