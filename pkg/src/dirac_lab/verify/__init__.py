"""Identity checks, probes, refinement studies and the Fock oracle."""

from .checks import (
    check_conservation,
    check_current_invariance,
    check_energy_difference_invariance,
    check_integration_by_parts,
    check_kernel_identities,
    check_sg_lower_bound,
    check_state_invariants,
    check_vacuum_properties,
    energy_difference_residual,
)
from .fitting import convergence_fit, fit_power_law, observed_orders, richardson_table
from .fock import FockSpace, fock_space_for
from .models import (
    Bound,
    CheckKind,
    CheckResult,
    ConvergenceFit,
    EnergyShiftStudy,
    FockDimensionError,
    RefinementCase,
)
from .oracle import fock_oracle_compare, oracle_state_energy
from .probes import (
    bare_current_refinement,
    check_energy_shift_identity,
    coupling_scheme_refinement,
    energy_difference_refinement,
    energy_shift,
    gauge_vacuum_energy,
    gradient_norm,
    vacuum_chain_report,
    vacuum_paradox_probe,
)

__all__ = [
    "Bound",
    "CheckKind",
    "CheckResult",
    "ConvergenceFit",
    "EnergyShiftStudy",
    "FockDimensionError",
    "FockSpace",
    "RefinementCase",
    "bare_current_refinement",
    "check_conservation",
    "check_current_invariance",
    "check_energy_difference_invariance",
    "check_energy_shift_identity",
    "check_integration_by_parts",
    "check_kernel_identities",
    "check_sg_lower_bound",
    "check_state_invariants",
    "check_vacuum_properties",
    "convergence_fit",
    "coupling_scheme_refinement",
    "energy_difference_refinement",
    "energy_difference_residual",
    "energy_shift",
    "fit_power_law",
    "fock_oracle_compare",
    "fock_space_for",
    "gauge_vacuum_energy",
    "gradient_norm",
    "observed_orders",
    "oracle_state_energy",
    "richardson_table",
    "vacuum_chain_report",
    "vacuum_paradox_probe",
]
