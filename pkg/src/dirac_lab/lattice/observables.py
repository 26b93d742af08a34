"""Charge and current kernels, and their expectation profiles.

The link current is derived from the charge density through ``i[h, rho]``
so that the lattice continuity equation

    d<rho_i>/dt = -(<J_i> - <J_{i-1}>) / a

holds exactly. With ``B_l`` the forward hopping block of the Hamiltonian on
link ``l`` this gives ``J_l = i q (B_l - B_l^dag)``.
"""

import numpy as np

from .models import (
    ComplexMatrix,
    DimensionMismatchError,
    LatticeConfig,
    LatticeError,
    LinkField,
    RealVector,
    SingleParticleOperator,
)
from .stencil import block, hopping_block


def _check_link_field(config: LatticeConfig, a_link: LinkField | None) -> None:
    if a_link is not None and len(a_link) != config.n_links:
        raise LatticeError(
            f"link field has {len(a_link)} values, lattice has {config.n_links} links"
        )


def link_phases(config: LatticeConfig, a_link: LinkField | None) -> np.ndarray:
    """Peierls phases ``exp(-i q a A_l)`` on every link (ones when ``A`` is None)."""
    _check_link_field(config, a_link)
    if a_link is None:
        return np.ones(config.n_links, dtype=np.complex128)
    return np.exp(-1j * config.charge * config.spacing * a_link.values)


def charge_density_kernel(config: LatticeConfig, site: int) -> SingleParticleOperator:
    """Kernel of the charge density at ``site`` (per unit length).

    Raises
    ------
    LatticeError
        If ``site`` is outside ``[0, N)``.

    """
    if not 0 <= site < config.n_sites:
        raise LatticeError(f"site {site} out of range [0, {config.n_sites})")
    matrix = np.zeros((config.dim, config.dim), dtype=np.complex128)
    idx = block(site)
    matrix[idx, idx] = np.eye(2) * config.charge / config.spacing
    return SingleParticleOperator(matrix=matrix, label=f"rho[{site}]")


def covariant_current_kernel(
    config: LatticeConfig, link: int, a_link: LinkField | None = None
) -> SingleParticleOperator:
    """Link current derived from the Peierls Hamiltonian ``h[A]``.

    With ``a_link=None`` this is the free (bare) current.
    """
    left, right = config.link_ends(link)
    phase = link_phases(config, a_link)[link]
    hop = hopping_block(config) * phase
    matrix = np.zeros((config.dim, config.dim), dtype=np.complex128)
    matrix[block(left), block(right)] += 1j * config.charge * hop
    matrix[block(right), block(left)] += -1j * config.charge * hop.conj().T
    tag = "J" if a_link is None else "J_cov"
    return SingleParticleOperator(matrix=matrix, label=f"{tag}[{link}]")


def current_kernel(config: LatticeConfig, link: int) -> SingleParticleOperator:
    """Kernel of the free link current ``J_l``.

    Raises
    ------
    LatticeError
        If ``link`` is outside the link range of the boundary convention.

    """
    return covariant_current_kernel(config, link, None)


def _check_matrix(config: LatticeConfig, corr: ComplexMatrix) -> None:
    if corr.shape != (config.dim, config.dim):
        raise DimensionMismatchError(
            f"matrix shape {corr.shape} does not match lattice dimension {config.dim}"
        )


def site_density_profile(config: LatticeConfig, corr: ComplexMatrix) -> RealVector:
    """``Tr(rho_i C)`` for every site, for any one-body matrix ``C``."""
    _check_matrix(config, corr)
    diag = np.real(np.diagonal(corr)).reshape(config.n_sites, 2).sum(axis=1)
    return config.charge * diag / config.spacing


def link_current_profile(
    config: LatticeConfig, corr: ComplexMatrix, a_link: LinkField | None = None
) -> RealVector:
    """``Tr(J_l C)`` for every link without building the kernels.

    Uses ``Tr(J_l C) = i q (Tr(B C) - Tr(B^dag C))`` with ``B`` the forward
    hopping block on the link.
    """
    _check_matrix(config, corr)
    hop = hopping_block(config)
    phases = link_phases(config, a_link)
    out = np.empty(config.n_links, dtype=np.float64)
    for link in range(config.n_links):
        left, right = config.link_ends(link)
        forward = phases[link] * hop
        # Tr(B C) with B at (left, right): sum_ab B_ab C[right_b, left_a]
        tr_b = np.sum(forward * corr[block(right), block(left)].T)
        tr_bdag = np.sum(forward.conj().T * corr[block(left), block(right)].T)
        out[link] = np.real(1j * config.charge * (tr_b - tr_bdag))
    return out


def divergence(config: LatticeConfig, link_values: RealVector) -> RealVector:
    """Site-centred backward difference ``(v_i - v_{i-1}) / a``.

    This is minus the adjoint of the forward link gradient, so summation by
    parts is exact for both boundary conventions (open chains have no link
    beyond either end).
    """
    values = np.asarray(link_values, dtype=np.float64)
    if values.shape != (config.n_links,):
        raise LatticeError(
            f"expected {config.n_links} link values, got {values.shape[0]}"
        )
    padded = np.zeros(config.n_sites, dtype=np.float64)
    padded[: config.n_links] = values
    # v_{i-1} with v_{-1} = v_{N-1} (periodic) or 0 (open)
    previous = np.roll(padded, 1)
    if config.n_links < config.n_sites:
        previous[0] = 0.0
    return (padded - previous) / config.spacing
