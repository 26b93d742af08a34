"""CLI command for the verification suite."""

import sys

import click
from dotenv import load_dotenv

from ...config import RunConfig
from ...gaussian.state import free_theory
from ...lattice.models import LatticeConfig
from ...report import ExperimentReport, ReportKind
from ...utils.logging import log_info, log_success, log_warning, print_table
from ...verify import (
    CheckKind,
    CheckResult,
    check_conservation,
    check_current_invariance,
    check_energy_difference_invariance,
    check_integration_by_parts,
    check_kernel_identities,
    check_sg_lower_bound,
    check_state_invariants,
    check_vacuum_properties,
    fock_oracle_compare,
    vacuum_chain_report,
    vacuum_paradox_probe,
)
from ...verify.probes import CONSTANT_CHI_TOL
from ..utils import (
    FORMAT_CHOICES,
    ExitCode,
    report_failure,
    resolve_run,
    write_report,
)

# Load .env file at module import time (before Click processes envvars)
load_dotenv()

CHECK_COLUMNS = ("name", "kind", "passed", "measured", "tolerance", "bound")


def collect_checks(run: RunConfig) -> list[CheckResult]:
    """Run every identity check and probe for ``run``, ordered by name."""
    config = run.lattice
    seed = run.seed
    h0, vac, vacuum = free_theory(config)
    state = run.state_recipe()(config, h0, vac)
    chi_recipe = run.chi_recipe()
    chi = chi_recipe(config)

    results = [
        *check_kernel_identities(config, seed),
        *check_vacuum_properties(config, run.verify.samples, seed),
        check_state_invariants(state, require_pure=True),
        check_current_invariance(state, chi, config),
        check_integration_by_parts(state, chi, config),
        check_conservation(state, config, t_final=run.verify.t_final),
        check_sg_lower_bound(chi, config, run.verify.sg_samples, seed),
        vacuum_chain_report(chi, config),
    ]
    results.extend(
        check_energy_difference_invariance(state, vacuum, chi, config, scheme)
        for scheme in run.schemes()
    )

    if run.verify.oracle:
        oracle_config = LatticeConfig(
            n_sites=run.verify.oracle_sites,
            spacing=config.spacing,
            mass=config.mass,
            wilson_r=config.wilson_r,
            boundary=config.boundary,
        )
        log_info(f"Running Fock oracle on N={oracle_config.n_sites}")
        results.extend(
            fock_oracle_compare(oracle_config, run.verify.oracle_trials, seed)
        )

    if chi.is_constant(CONSTANT_CHI_TOL):
        log_warning("Constant gauge function: skipping the vacuum-energy probe")
    else:
        probe, _ = vacuum_paradox_probe(chi_recipe, config, levels=run.refinement)
        results.append(probe)

    return sorted(results, key=lambda result: result.name)


def _print_summary(results: list[CheckResult]) -> None:
    rows = []
    for result in results:
        if result.kind is CheckKind.PROBE:
            status = "[cyan]probe[/cyan]"
        elif result.passed:
            status = "[green]pass[/green]"
        else:
            status = "[red]FAIL[/red]"
        rows.append(
            (
                result.name,
                f"{result.measured:.3e}",
                f"{result.tolerance:.0e}",
                status,
            )
        )
    print_table("Verification", ("check", "measured", "tolerance", "status"), rows)


def build_verify_report(run: RunConfig, results: list[CheckResult]) -> ExperimentReport:
    """Assemble the verification report from ordered results."""
    failures = [r.name for r in results if r.gates_exit]
    return ExperimentReport(
        kind=ReportKind.VERIFY,
        config=run.to_dict(),
        seed=run.seed,
        columns=CHECK_COLUMNS,
        rows=[
            {
                "name": r.name,
                "kind": r.kind.value,
                "passed": r.passed,
                "measured": r.measured,
                "tolerance": r.tolerance,
                "bound": r.bound.value,
            }
            for r in results
        ],
        checks=[r.to_dict() for r in results],
        summary={
            "identity_checks": sum(r.kind is CheckKind.IDENTITY for r in results),
            "probes": sum(r.kind is CheckKind.PROBE for r in results),
            "failures": failures,
            "exit_status": int(
                ExitCode.CHECK_FAILURE if failures else ExitCode.OK
            ),
        },
    )


def run_verify(
    config_path: str | None,
    seed: int | None = None,
    out: str | None = None,
    fmt: str | None = None,
) -> ExitCode:
    """Run the verification suite and write its report.

    Returns
    -------
    ExitCode
        ``CHECK_FAILURE`` if any identity check failed, else ``OK``. Probe
        values never change the status.

    """
    run = resolve_run(config_path, seed, out, fmt)
    log_info(f"Verifying N={run.lattice.n_sites}, a={run.lattice.spacing:g}, seed={run.seed}")
    results = collect_checks(run)
    _print_summary(results)
    report = build_verify_report(run, results)
    write_report(report, run)

    failures = report.summary["failures"]
    if failures:
        for name in failures:
            log_warning(f"Identity check failed: {name}")
        return ExitCode.CHECK_FAILURE
    log_success("All identity checks passed")
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
def verify(
    config_path: str | None, out: str | None, seed: int | None, fmt: str | None
) -> None:
    """Run the identity checks and probes and write the verification report.

    Exits 1 if an identity check fails; probes are reported only.

    Examples:
      \b
      dirac-gauge-lab verify
      dirac-gauge-lab verify --config configs/quick.yaml --out results/quick --format json

    """
    try:
        code = run_verify(config_path, seed, out, fmt)
    except Exception as exc:
        code = report_failure(exc)
    sys.exit(int(code))
