"""Gaussian fermionic states in the correlation-matrix representation."""

from .models import CorrelationState, ModeError, VacuumReference, ZeroModeError
from .state import (
    build_vacuum,
    energy_with_potential,
    evolve,
    excite,
    expectation,
    free_energy,
    free_theory,
    link_currents,
    random_pure_state,
    single_particle_modes,
    site_densities,
    wavepacket_mode,
    wavepacket_state,
)

__all__ = [
    "CorrelationState",
    "ModeError",
    "VacuumReference",
    "ZeroModeError",
    "build_vacuum",
    "energy_with_potential",
    "evolve",
    "excite",
    "expectation",
    "free_energy",
    "free_theory",
    "link_currents",
    "random_pure_state",
    "single_particle_modes",
    "site_densities",
    "wavepacket_mode",
    "wavepacket_state",
]
