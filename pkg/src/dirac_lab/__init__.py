"""dirac-gauge-lab - gauge invariance and the energy bound of a lattice Dirac field."""

from importlib.metadata import PackageNotFoundError, version

try:
    __version__ = version("dirac-gauge-lab")
except PackageNotFoundError:
    # Package not installed, use fallback
    __version__ = "0.1.0.dev"

from .config import ConfigError, RunConfig, load_run_config
from .counterexample import SweepReport, SweepRow, run_sweep, sweep_f
from .gauge import GaugeFunction, apply_gauge, sg_energy
from .gaussian import CorrelationState, VacuumReference, build_vacuum, free_energy
from .lattice import (
    CouplingScheme,
    LatticeConfig,
    build_coupled_hamiltonian,
    build_free_hamiltonian,
)
from .report import ExperimentReport, ReportWriter
from .verify import CheckResult, ConvergenceFit, fock_oracle_compare

__all__ = [
    "CheckResult",
    "ConfigError",
    "ConvergenceFit",
    "CorrelationState",
    "CouplingScheme",
    "ExperimentReport",
    "GaugeFunction",
    "LatticeConfig",
    "ReportWriter",
    "RunConfig",
    "SweepReport",
    "SweepRow",
    "VacuumReference",
    "apply_gauge",
    "build_coupled_hamiltonian",
    "build_free_hamiltonian",
    "build_vacuum",
    "fock_oracle_compare",
    "free_energy",
    "load_run_config",
    "run_sweep",
    "sg_energy",
    "sweep_f",
    "__version__",
]
