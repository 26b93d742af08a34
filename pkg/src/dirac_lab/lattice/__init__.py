"""Wilson-Dirac lattice kernels: Hamiltonians, charge and current."""

from .hamiltonian import (
    allowed_momenta,
    build_coupled_hamiltonian,
    build_free_hamiltonian,
    charge_conjugation,
    lattice_dispersion,
    translation_operator,
)
from .models import (
    CHARGE,
    Boundary,
    CouplingScheme,
    DimensionMismatchError,
    LatticeConfig,
    LatticeError,
    LinkField,
    ScalarPotential,
    SingleParticleOperator,
)
from .observables import (
    charge_density_kernel,
    covariant_current_kernel,
    current_kernel,
    divergence,
    link_current_profile,
    site_density_profile,
)

__all__ = [
    "CHARGE",
    "Boundary",
    "CouplingScheme",
    "DimensionMismatchError",
    "LatticeConfig",
    "LatticeError",
    "LinkField",
    "ScalarPotential",
    "SingleParticleOperator",
    "allowed_momenta",
    "build_coupled_hamiltonian",
    "build_free_hamiltonian",
    "charge_conjugation",
    "charge_density_kernel",
    "covariant_current_kernel",
    "current_kernel",
    "divergence",
    "lattice_dispersion",
    "link_current_profile",
    "site_density_profile",
    "translation_operator",
]
