"""CLI commands for dirac-gauge-lab."""

from .converge import converge
from .sweep import sweep
from .verify import verify

__all__ = ["converge", "sweep", "verify"]
