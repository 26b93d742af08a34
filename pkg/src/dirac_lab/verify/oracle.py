"""Correlation-matrix engine against the explicit Fock-space oracle."""

from collections import defaultdict

import numpy as np

from ..gauge.models import GaugeFunction
from ..gauge.transform import apply_gauge, gradient_on_links, sg_energy
from ..gaussian.models import CorrelationState
from ..gaussian.state import (
    evolve,
    expectation,
    free_energy,
    free_theory,
    link_currents,
    random_pure_state,
)
from ..lattice.hamiltonian import build_coupled_hamiltonian
from ..lattice.models import (
    CouplingScheme,
    LatticeConfig,
    ScalarPotential,
    SingleParticleOperator,
)
from ..lattice.observables import current_kernel
from .checks import SPECTRAL_TOL
from .fock import (
    evolve_vector,
    expectation_value,
    fock_space_for,
    ground_state,
)
from .models import CheckResult


def _random_hermitian(dim: int, rng: np.random.Generator) -> SingleParticleOperator:
    raw = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return SingleParticleOperator(matrix=0.5 * (raw + raw.conj().T), label="random")


def fock_oracle_compare(
    config: LatticeConfig, trials: int = 50, seed: int = 0, time: float = 0.7
) -> list[CheckResult]:
    """Compare every correlation-matrix quantity with the Fock oracle.

    Each trial draws a Haar-random pure state at half filling, a random gauge
    function and a random Hermitian kernel from ``default_rng(seed)``.
    One result per quantity reports the largest deviation over all trials.

    Raises
    ------
    FockDimensionError
        If ``config.n_sites > 4``.

    """
    space = fock_space_for(config)
    h0, vac, vacuum = free_theory(config)
    h0_fock = space.quadratic(h0.matrix)
    ground_energy, ground = ground_state(h0_fock)
    currents_fock = [
        space.quadratic(current_kernel(config, link).matrix)
        for link in range(config.n_links)
    ]
    tag = f"N={config.n_sites}, trials={trials}, seed={seed}"

    vacuum_vector = space.slater_from_correlation(vacuum)
    deviations: dict[str, float] = defaultdict(float)
    deviations["vacuum_energy_raw"] = abs(ground_energy - vac.vacuum_energy_raw)
    deviations["vacuum_free_energy"] = abs(
        expectation_value(h0_fock, vacuum_vector) - ground_energy
    )

    def record(name: str, engine: float, oracle: float) -> None:
        deviations[name] = max(deviations[name], abs(engine - oracle))

    zero_a0 = ScalarPotential.zeros(config)
    rng = np.random.default_rng(seed)
    for _ in range(trials):
        state = random_pure_state(vac, rng)
        chi = GaugeFunction.random(config, rng)
        kernel = _random_hermitian(config.dim, rng)
        vector = space.slater_from_correlation(state)

        record(
            "free_energy",
            free_energy(state, h0, vac),
            expectation_value(h0_fock, vector) - ground_energy,
        )
        engine_currents = link_currents(state, config, vac)
        for link, op in enumerate(currents_fock):
            record(
                "current",
                engine_currents[link],
                expectation_value(op, vector) - expectation_value(op, ground),
            )
        record(
            "expectation",
            expectation(kernel, state),
            expectation_value(space.quadratic(kernel.matrix), vector),
        )

        unitary = space.gauge_unitary(chi, config.charge)
        gauged_vector = unitary @ vector
        gauged_ground = unitary @ ground
        gauged = apply_gauge(state, chi)
        record(
            "gauged_free_energy",
            free_energy(gauged, h0, vac),
            expectation_value(h0_fock, gauged_vector) - ground_energy,
        )
        a_link = gradient_on_links(chi, config)
        for scheme in CouplingScheme:
            h_fock = space.quadratic(
                build_coupled_hamiltonian(config, a_link, zero_a0, scheme).matrix
            )
            raw = expectation_value(h_fock, gauged_vector)
            record(
                f"sg_energy[{scheme.value}]",
                sg_energy(gauged, chi, config, h0, vac, scheme),
                raw - expectation_value(h_fock, gauged_ground),
            )
            record(
                f"sg_energy_free_frame[{scheme.value}]",
                sg_energy(gauged, chi, config, h0, vac, scheme, frame="free"),
                raw - expectation_value(h_fock, ground),
            )

        evolved = evolve(state, h0, time)
        oracle_corr = space.correlation(evolve_vector(h0_fock, vector, time))
        deviations["evolution"] = max(
            deviations["evolution"], float(np.max(np.abs(evolved.corr - oracle_corr)))
        )

    return [
        CheckResult.evaluate(f"oracle.{name}", value, SPECTRAL_TOL, tag)
        for name, value in sorted(deviations.items())
    ]


def oracle_state_energy(state: CorrelationState, config: LatticeConfig) -> float:
    """Normal-ordered free energy of ``state`` computed entirely in Fock space."""
    space = fock_space_for(config)
    h0, _, _ = free_theory(config)
    h0_fock = space.quadratic(h0.matrix)
    ground_energy, _ = ground_state(h0_fock)
    return expectation_value(h0_fock, space.slater_from_correlation(state)) - ground_energy
