"""Vacuum construction, energies, excitations and evolution of Gaussian states.

Every quadratic expectation value is a trace against the correlation matrix:
``<sum psi^dag M psi> = Tr(M C)``. Normal ordering subtracts the value in the
reference vacuum, ``Tr(M (C - P))``.
"""

from functools import lru_cache

import numpy as np
from scipy.stats import unitary_group

from ..lattice.hamiltonian import build_free_hamiltonian
from ..lattice.models import (
    ComplexMatrix,
    DimensionMismatchError,
    LatticeConfig,
    RealVector,
    SingleParticleOperator,
)
from ..lattice.observables import link_current_profile, site_density_profile
from .models import CorrelationState, ModeError, VacuumReference, ZeroModeError

ZERO_MODE_TOL = 1e-9
MODE_TOL = 1e-8


def _trace_product(kernel: ComplexMatrix, matrix: ComplexMatrix) -> float:
    # Tr(K M) = sum_ij K_ij M_ji
    return float(np.real(np.sum(kernel * matrix.T)))


def _check_dims(*dims: int) -> None:
    if len(set(dims)) != 1:
        raise DimensionMismatchError(f"dimension mismatch: {dims}")


def single_particle_modes(h: SingleParticleOperator) -> tuple[RealVector, ComplexMatrix]:
    """Eigenvalues (ascending) and orthonormal eigenvectors (columns) of ``h``."""
    energies, vectors = np.linalg.eigh(h.matrix)
    return energies, vectors


def build_vacuum(
    h0: SingleParticleOperator,
) -> tuple[VacuumReference, CorrelationState]:
    """Fill every negative-energy mode of ``h0``.

    Returns
    -------
    tuple[VacuumReference, CorrelationState]
        The reference ``P_-`` with ``Tr(h0 P_-)`` and the vacuum state
        ``C = P_-``, whose normal-ordered energy is zero by construction.

    Raises
    ------
    ZeroModeError
        If any eigenvalue lies within ``1e-9`` of zero. The filling would be
        ambiguous; use a positive mass.

    """
    energies, vectors = single_particle_modes(h0)
    near_zero = np.abs(energies) < ZERO_MODE_TOL
    if np.any(near_zero):
        raise ZeroModeError(
            f"h0 has {int(near_zero.sum())} eigenvalue(s) within {ZERO_MODE_TOL} of "
            "zero; the vacuum filling is ambiguous. Use mass > 0 so the spectrum is "
            "gapped (or offset the momenta so k = 0 is not resolved)."
        )
    occupied = vectors[:, energies < 0]
    projector = occupied @ occupied.conj().T
    vac = VacuumReference(
        projector=projector,
        vacuum_energy_raw=float(np.sum(energies[energies < 0])),
        label="vacuum",
    )
    return vac, vac.as_state()


def expectation(
    kernel: SingleParticleOperator,
    state: CorrelationState,
    vac: VacuumReference | None = None,
    normal_ordered: bool = False,
) -> float:
    """``Tr(M C)``, or ``Tr(M (C - P))`` when ``normal_ordered``.

    Raises
    ------
    DimensionMismatchError
        If kernel, state and vacuum sizes disagree.
    ValueError
        If ``normal_ordered`` is requested without a vacuum.

    """
    if not normal_ordered:
        _check_dims(kernel.dim, state.dim)
        return _trace_product(kernel.matrix, state.corr)
    if vac is None:
        raise ValueError("normal-ordered expectation needs a vacuum reference")
    _check_dims(kernel.dim, state.dim, vac.dim)
    return _trace_product(kernel.matrix, state.corr - vac.projector)


def free_energy(
    state: CorrelationState, h0: SingleParticleOperator, vac: VacuumReference
) -> float:
    """Normal-ordered free field energy ``Tr(h0 (C - P_-))``."""
    return expectation(h0, state, vac, normal_ordered=True)


def energy_with_potential(
    state: CorrelationState, h_coupled: SingleParticleOperator, vac: VacuumReference
) -> float:
    """Energy ``Tr(h (C - P))`` in a static potential.

    The reference ``P`` is whatever vacuum the caller passes; observers at
    rest in the free theory pass the free ``P_-``.
    """
    return expectation(h_coupled, state, vac, normal_ordered=True)


def excite(
    state: CorrelationState,
    creator_mode: ComplexMatrix,
    annihilator_mode: ComplexMatrix | None = None,
    label: str | None = None,
) -> CorrelationState:
    """Apply ``b^dag(u)`` (and optionally ``b(v)``) to a Gaussian state.

    The correlation matrix changes by the rank-one updates
    ``C + |u><u| - |v><v|``, which keeps pure states pure.

    Raises
    ------
    ModeError
        If a mode is not normalized, ``u`` is not empty in ``state``, ``v``
        is not filled in ``state``, or ``u`` and ``v`` overlap.

    """
    corr = state.corr
    u = np.asarray(creator_mode, dtype=np.complex128).reshape(-1)
    _check_dims(u.shape[0], state.dim)
    if abs(np.linalg.norm(u) - 1.0) > MODE_TOL:
        raise ModeError(f"creator mode has norm {np.linalg.norm(u):.6g}, expected 1")
    if np.linalg.norm(corr @ u) > MODE_TOL:
        raise ModeError("creator mode overlaps occupied orbitals of the state")
    updated = corr + np.outer(u, u.conj())

    if annihilator_mode is not None:
        v = np.asarray(annihilator_mode, dtype=np.complex128).reshape(-1)
        _check_dims(v.shape[0], state.dim)
        if abs(np.linalg.norm(v) - 1.0) > MODE_TOL:
            raise ModeError(
                f"annihilator mode has norm {np.linalg.norm(v):.6g}, expected 1"
            )
        if abs(np.vdot(u, v)) > MODE_TOL:
            raise ModeError("creator and annihilator modes are not orthogonal")
        if np.linalg.norm(corr @ v - v) > MODE_TOL:
            raise ModeError("annihilator mode is not occupied in the state")
        updated = updated - np.outer(v, v.conj())

    return CorrelationState(corr=updated, label=label or f"{state.label}+excitation")


def evolve(
    state: CorrelationState, h: SingleParticleOperator, t: float
) -> CorrelationState:
    """Schrodinger evolution ``C(t) = e^{-iht} C e^{iht}`` by spectral decomposition."""
    _check_dims(state.dim, h.dim)
    energies, vectors = single_particle_modes(h)
    propagator = (vectors * np.exp(-1j * energies * t)) @ vectors.conj().T
    corr = propagator @ state.corr @ propagator.conj().T
    return CorrelationState(corr=corr, label=state.label)


def random_pure_state(
    vac: VacuumReference, rng: np.random.Generator, label: str = "random"
) -> CorrelationState:
    """Haar-random rotation of the vacuum, ``C = U P_- U^dag``."""
    unitary = unitary_group.rvs(vac.dim, random_state=rng)
    corr = unitary @ vac.projector @ unitary.conj().T
    return CorrelationState(corr=corr, label=label)


def wavepacket_mode(
    config: LatticeConfig,
    state: CorrelationState,
    center: float,
    width: float,
    momentum: float,
) -> ComplexMatrix:
    """Normalized Gaussian packet projected onto the empty orbitals of ``state``.

    The envelope ``exp(-(x - x0)^2 / (4 w^2) + i k0 (x - x0))`` (minimum-image
    distance on periodic chains) multiplies the upper spinor, the
    positive-energy spinor at rest for ``beta = sigma_z``. For the vacuum the
    projection ``1 - C`` keeps only positive-energy modes.

    Raises
    ------
    ModeError
        If the packet has no weight on the empty orbitals.

    """
    _check_dims(config.dim, state.dim)
    if width <= 0:
        raise ModeError(f"wavepacket width must be > 0, got {width}")
    x = config.positions
    dx = x - center
    if config.boundary.value == "periodic":
        dx = (dx + 0.5 * config.length) % config.length - 0.5 * config.length
    envelope = np.exp(-(dx**2) / (4.0 * width**2) + 1j * momentum * dx)
    raw = np.zeros(config.dim, dtype=np.complex128)
    raw[0::2] = envelope
    projected = raw - state.corr @ raw
    norm = np.linalg.norm(projected)
    if norm < 1e-6 * np.linalg.norm(raw):
        raise ModeError("wavepacket has no weight on the empty orbitals")
    mode = projected / norm
    # One more projection removes round-off overlap with occupied orbitals.
    mode = mode - state.corr @ mode
    return mode / np.linalg.norm(mode)


def site_densities(
    state: CorrelationState,
    config: LatticeConfig,
    vac: VacuumReference | None = None,
) -> RealVector:
    """``<rho_i>`` on every site (normal-ordered when ``vac`` is given)."""
    corr = state.corr if vac is None else state.corr - vac.projector
    return site_density_profile(config, corr)


def link_currents(
    state: CorrelationState,
    config: LatticeConfig,
    vac: VacuumReference | None = None,
) -> RealVector:
    """``<J_l>`` on every link (normal-ordered when ``vac`` is given)."""
    corr = state.corr if vac is None else state.corr - vac.projector
    return link_current_profile(config, corr)


def wavepacket_state(
    config: LatticeConfig,
    vacuum: CorrelationState,
    center: float,
    width: float,
    momentum: float,
) -> CorrelationState:
    """Vacuum plus one particle in a Gaussian wavepacket of positive-energy modes."""
    mode = wavepacket_mode(config, vacuum, center, width, momentum)
    return excite(vacuum, mode, label=f"wavepacket(k0={momentum:g})")


@lru_cache(maxsize=32)
def free_theory(
    config: LatticeConfig,
) -> tuple[SingleParticleOperator, VacuumReference, CorrelationState]:
    """``h0``, its vacuum reference and the vacuum state, cached per lattice."""
    h0 = build_free_hamiltonian(config)
    vac, vacuum = build_vacuum(h0)
    return h0, vac, vacuum
