"""Wilson-Dirac single-particle Hamiltonians, free and potential-coupled."""

import numpy as np

from .models import (
    Boundary,
    ComplexMatrix,
    CouplingScheme,
    LatticeConfig,
    LatticeError,
    LinkField,
    RealVector,
    ScalarPotential,
    SingleParticleOperator,
)
from .observables import current_kernel, link_phases
from .stencil import IDENTITY_2, SIGMA_Y, block, hopping_block, onsite_block


def _assemble(config: LatticeConfig, phases: np.ndarray) -> ComplexMatrix:
    n = config.n_sites
    matrix = np.kron(np.eye(n), onsite_block(config)).astype(np.complex128)
    hop = hopping_block(config)
    for link in range(config.n_links):
        left, right = config.link_ends(link)
        forward = hop * phases[link]
        matrix[block(left), block(right)] += forward
        matrix[block(right), block(left)] += forward.conj().T
    return matrix


def build_free_hamiltonian(config: LatticeConfig) -> SingleParticleOperator:
    """Build the free Wilson-Dirac kernel ``h0``.

    ``h0 = alpha (x) central difference + beta (x) (m + Wilson term)``, i.e.
    diagonal blocks ``beta (m + r/a)`` and forward hops ``(-i alpha - r beta)/(2a)``.

    Parameters
    ----------
    config : LatticeConfig
        Lattice geometry and couplings.

    Returns
    -------
    SingleParticleOperator
        Hermitian ``2N x 2N`` kernel labelled ``"h0"``.

    """
    matrix = _assemble(config, np.ones(config.n_links, dtype=np.complex128))
    return SingleParticleOperator(matrix=matrix, label="h0")


def build_coupled_hamiltonian(
    config: LatticeConfig,
    a_link: LinkField,
    a0: ScalarPotential,
    scheme: CouplingScheme | str = CouplingScheme.PEIERLS,
) -> SingleParticleOperator:
    """Build the kernel of ``H0 - int J.A + int rho A0`` on the lattice.

    The ``linear`` scheme is the literal first-order coupling
    ``h0 - a sum_l A_l J_l + a sum_i A0_i rho_i``. The ``peierls`` scheme
    multiplies each forward hop by ``exp(-i q a A_l)`` and is exactly gauge
    covariant; it agrees with ``linear`` to first order in ``a A``.

    Raises
    ------
    LatticeError
        If the field lengths do not match the lattice.

    """
    scheme = CouplingScheme(scheme)
    if len(a_link) != config.n_links:
        raise LatticeError(
            f"link field has {len(a_link)} values, lattice has {config.n_links} links"
        )
    if len(a0) != config.n_sites:
        raise LatticeError(
            f"scalar potential has {len(a0)} values, lattice has {config.n_sites} sites"
        )
    # a * rho_i * A0_i = q * A0_i on both spinor components
    potential = np.kron(np.diag(config.charge * a0.values), IDENTITY_2)

    if scheme is CouplingScheme.PEIERLS:
        matrix = _assemble(config, link_phases(config, a_link)) + potential
    else:
        matrix = build_free_hamiltonian(config).matrix + potential
        for link in np.flatnonzero(a_link.values):
            coupling = config.spacing * a_link.values[link]
            matrix = matrix - coupling * current_kernel(config, int(link)).matrix
    return SingleParticleOperator(matrix=matrix, label=f"h[{scheme.value}]")


def lattice_dispersion(config: LatticeConfig, momentum: RealVector) -> RealVector:
    """Positive branch ``E(k) = sqrt(sin^2(ka)/a^2 + (m + r(1 - cos ka)/a)^2)``."""
    k = np.asarray(momentum, dtype=np.float64)
    a, r, m = config.spacing, config.wilson_r, config.mass
    kinetic = np.sin(k * a) / a
    wilson_mass = m + r * (1.0 - np.cos(k * a)) / a
    return np.sqrt(kinetic**2 + wilson_mass**2)


def allowed_momenta(config: LatticeConfig) -> RealVector:
    """Momenta ``2 pi n / L`` resolved by a periodic chain.

    Raises
    ------
    LatticeError
        For open chains, which have no momentum quantum number.

    """
    if config.boundary is not Boundary.PERIODIC:
        raise LatticeError("momenta are only defined for periodic chains")
    return 2.0 * np.pi * np.arange(config.n_sites) / config.length


def charge_conjugation(config: LatticeConfig) -> ComplexMatrix:
    """Spinor conjugation ``Gamma = 1_N (x) sigma_y``; ``Gamma h0 Gamma^-1 = -h0``."""
    return np.kron(np.eye(config.n_sites), SIGMA_Y)


def translation_operator(config: LatticeConfig) -> ComplexMatrix:
    """One-site translation ``site i -> i + 1`` acting trivially on spinors."""
    shift = np.roll(np.eye(config.n_sites), 1, axis=0)
    return np.kron(shift, IDENTITY_2).astype(np.complex128)
