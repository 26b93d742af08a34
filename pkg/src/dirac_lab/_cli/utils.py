"""Shared utilities for CLI commands."""

from enum import IntEnum
from importlib.metadata import PackageNotFoundError, version

from ..config import (
    ConfigParseError,
    ConfigSchemaError,
    RunConfig,
    load_run_config,
    resolve_seed,
)
from ..counterexample.models import DegenerateConstructionError
from ..report import ExperimentReport, ReportWriter
from ..utils.logging import log_error, log_info

FORMAT_CHOICES = ("csv", "json", "both")


class ExitCode(IntEnum):
    """Process exit status of the subcommands."""

    OK = 0
    CHECK_FAILURE = 1
    CONFIG_PARSE = 3
    CONFIG_SCHEMA = 4
    FILESYSTEM = 5
    DEGENERATE = 6
    ERROR = 7


def get_version() -> str:
    """Get the installed version of the package.

    Returns
    -------
    str
        Version string from package metadata.

    """
    try:
        return version("dirac-gauge-lab")
    except PackageNotFoundError:
        return "unknown"


def exit_code_for(exc: BaseException) -> ExitCode:
    """Map an exception raised by a run to its exit status."""
    if isinstance(exc, ConfigParseError):
        return ExitCode.CONFIG_PARSE
    if isinstance(exc, ConfigSchemaError):
        return ExitCode.CONFIG_SCHEMA
    if isinstance(exc, OSError):
        return ExitCode.FILESYSTEM
    if isinstance(exc, DegenerateConstructionError):
        return ExitCode.DEGENERATE
    return ExitCode.ERROR


def report_failure(exc: BaseException) -> ExitCode:
    """Log ``exc`` with a hint where one helps and return its exit status."""
    code = exit_code_for(exc)
    log_error(str(exc) or type(exc).__name__)
    if code is ExitCode.DEGENERATE:
        log_info("Use the wavepacket state recipe to get a nonzero current divergence.")
    elif code is ExitCode.CONFIG_SCHEMA:
        log_info("Unknown keys are rejected; see docs/configuration.md for the schema.")
    return code


def formats_for(choice: str | None) -> list[str] | None:
    """Expand a ``--format`` choice to report formats (``None`` keeps config)."""
    if choice is None:
        return None
    return ["csv", "json"] if choice == "both" else [choice]


def resolve_run(
    config_path: str | None,
    seed: int | None = None,
    out: str | None = None,
    fmt: str | None = None,
) -> RunConfig:
    """Load the run configuration and apply command-line overrides.

    Raises
    ------
    ConfigParseError
        If the file is not valid YAML.
    ConfigSchemaError
        If the file violates the schema.
    OSError
        If the file cannot be read.

    """
    run = load_run_config(config_path)
    run = run.with_seed(resolve_seed(seed, run))
    return run.with_output(prefix=out, formats=formats_for(fmt))


def write_report(report: ExperimentReport, run: RunConfig) -> list[str]:
    """Write ``report`` to the run's output prefix in its formats."""
    return ReportWriter.write(
        report, run.output.prefix, [f.value for f in run.output.formats]
    )
