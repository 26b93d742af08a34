"""Public CLI exports for dirac-gauge-lab.

This module provides the main CLI entry point.
"""

from ._cli.commands.converge import run_converge
from ._cli.commands.sweep import run_sweep_command
from ._cli.commands.verify import run_verify
from ._cli.main import cli
from ._cli.utils import ExitCode, get_version

__all__ = [
    "ExitCode",
    "cli",
    "get_version",
    "run_converge",
    "run_sweep_command",
    "run_verify",
]
