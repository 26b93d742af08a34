"""Static gauge changes acting on potentials, states and observers."""

from typing import Literal

import numpy as np

from ..gaussian.models import CorrelationState, VacuumReference
from ..gaussian.state import energy_with_potential, link_currents
from ..lattice.hamiltonian import build_coupled_hamiltonian
from ..lattice.models import (
    CHARGE,
    CouplingScheme,
    DimensionMismatchError,
    LatticeConfig,
    LinkField,
    RealVector,
    ScalarPotential,
    SingleParticleOperator,
)
from ..lattice.observables import divergence
from .models import GaugeError, GaugeFunction, GaugeUnitary

Frame = Literal["observer", "free"]


def _check_length(chi: GaugeFunction, config: LatticeConfig) -> None:
    if len(chi) != config.n_sites:
        raise GaugeError(
            f"gauge function has {len(chi)} samples, lattice has {config.n_sites} sites"
        )


def gradient_on_links(chi: GaugeFunction, config: LatticeConfig) -> LinkField:
    """Pure-gauge potential ``A_l = (chi_{l+1} - chi_l) / a`` on every link.

    Periodic chains wrap the last link back to site 0.
    """
    _check_length(chi, config)
    ends = np.array([config.link_ends(link)[1] for link in range(config.n_links)])
    starts = np.arange(config.n_links)
    values = (chi.chi[ends] - chi.chi[starts]) / config.spacing
    return LinkField(values=values, label=f"grad({chi.label})")


def _unitary(chi: GaugeFunction, charge: int) -> GaugeUnitary:
    return GaugeUnitary(phases=np.repeat(np.exp(1j * charge * chi.chi), 2))


def make_unitary(chi: GaugeFunction, config: LatticeConfig) -> GaugeUnitary:
    """Local phase unitary ``G_chi = diag(exp(i q chi_site)) (x) 1_2``."""
    _check_length(chi, config)
    return _unitary(chi, config.charge)


def apply_gauge(state: CorrelationState, chi: GaugeFunction) -> CorrelationState:
    """Gauge-transform a state, ``C -> G_chi C G_chi^dag``.

    Raises
    ------
    DimensionMismatchError
        If ``chi`` does not have one sample per site of the state.

    """
    if 2 * len(chi) != state.dim:
        raise DimensionMismatchError(
            f"gauge function has {len(chi)} samples, state has {state.dim // 2} sites"
        )
    unitary = _unitary(chi, CHARGE)
    label = f"U[{chi.label}]{state.label}" if state.label else f"U[{chi.label}]"
    return CorrelationState(corr=unitary.conjugate(state.corr), label=label)


def transform_vacuum(
    vac: VacuumReference, chi: GaugeFunction, config: LatticeConfig
) -> VacuumReference:
    """Vacuum of observer ``S_g``: the projector ``G P_- G^dag``.

    This is the filled sea of the Peierls Hamiltonian ``h[grad chi]`` and so
    the lowest-energy state that observer sees.
    """
    _check_length(chi, config)
    if vac.dim != config.dim:
        raise DimensionMismatchError(
            f"vacuum dimension {vac.dim} does not match lattice dimension {config.dim}"
        )
    unitary = make_unitary(chi, config)
    return VacuumReference(
        projector=unitary.conjugate(vac.projector),
        vacuum_energy_raw=vac.vacuum_energy_raw,
        label=f"vacuum[{chi.label}]",
    )


def sg_energy(
    state: CorrelationState,
    chi: GaugeFunction,
    config: LatticeConfig,
    h0: SingleParticleOperator,
    vac: VacuumReference,
    scheme: CouplingScheme | str = CouplingScheme.PEIERLS,
    frame: Frame = "observer",
) -> float:
    """Energy of ``state`` as seen by observer ``S_g`` in the potential ``grad chi``.

    Evaluates ``Tr(h[grad chi] (C - P))``. With the ``linear`` scheme the
    kernel is ``h0 - a sum_l (grad chi)_l J_l``; with ``peierls`` it is the
    exactly covariant completion.

    Parameters
    ----------
    state : CorrelationState
        State to evaluate.
    chi : GaugeFunction
        Gauge function defining the observer.
    config : LatticeConfig
        Lattice the kernels live on.
    h0 : SingleParticleOperator
        Free kernel ``vac`` was built from.
    vac : VacuumReference
        Free vacuum ``P_-``.
    scheme : CouplingScheme or str, optional
        Coupling scheme of the potential (default=peierls).
    frame : {"observer", "free"}, optional
        Normal-ordering reference. ``"observer"`` (default) orders against
        the observer's own vacuum ``G P_- G^dag``, for which the Peierls value
        of ``apply_gauge(state, chi)`` equals ``free_energy(state)`` exactly.
        ``"free"`` orders against ``P_-`` and differs from it by the c-number
        ``free_energy(apply_gauge(vacuum, chi))``.

    Returns
    -------
    float
        Normal-ordered energy.

    """
    if h0.dim != config.dim or vac.dim != config.dim:
        raise DimensionMismatchError(
            f"h0 ({h0.dim}) and vacuum ({vac.dim}) must match lattice dimension "
            f"{config.dim}"
        )
    h_coupled = build_coupled_hamiltonian(
        config, gradient_on_links(chi, config), ScalarPotential.zeros(config), scheme
    )
    if frame == "observer":
        reference = transform_vacuum(vac, chi, config)
    elif frame == "free":
        reference = vac
    else:
        raise ValueError(f"unknown frame {frame!r}; expected 'observer' or 'free'")
    return energy_with_potential(state, h_coupled, reference)


def divergence_of_current(
    state: CorrelationState,
    config: LatticeConfig,
    vac: VacuumReference | None = None,
) -> RealVector:
    """Site-centred divergence ``(<J_i> - <J_{i-1}>) / a`` of the link currents.

    The stencil is minus the adjoint of :func:`gradient_on_links`, so
    ``a sum <J> grad chi = -a sum chi div<J>`` holds exactly.
    """
    return divergence(config, link_currents(state, config, vac))
