"""CLI module for dirac-gauge-lab."""

from .main import cli

__all__ = ["cli"]
