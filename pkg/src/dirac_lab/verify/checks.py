"""Identity checks on a single lattice.

Tolerance ladder: 1e-12 for algebraic identities, 1e-10 for pipelines that
go through a spectral decomposition, 1e-9 for randomized one-sided bounds.
Algebraic tolerances are relative to the magnitude of the compared values
once those exceed one.
"""

import numpy as np

from ..gauge.models import GaugeFunction
from ..gauge.transform import (
    apply_gauge,
    divergence_of_current,
    gradient_on_links,
    make_unitary,
    sg_energy,
    transform_vacuum,
)
from ..gaussian.models import CorrelationState
from ..gaussian.state import (
    energy_with_potential,
    evolve,
    free_energy,
    free_theory,
    link_currents,
    random_pure_state,
    site_densities,
)
from ..lattice.hamiltonian import (
    build_coupled_hamiltonian,
    charge_conjugation,
    translation_operator,
)
from ..lattice.models import (
    Boundary,
    CouplingScheme,
    LatticeConfig,
    LinkField,
    ScalarPotential,
)
from ..lattice.observables import (
    charge_density_kernel,
    current_kernel,
    link_current_profile,
)
from .fitting import richardson_table
from .models import Bound, CheckKind, CheckResult

ALGEBRAIC_TOL = 1e-12
SPECTRAL_TOL = 1e-10
RANDOM_BOUND_TOL = 1e-9


def _scale(*arrays: np.ndarray) -> float:
    return max([1.0] + [float(np.max(np.abs(x))) for x in arrays if np.size(x)])


def _lattice_tag(config: LatticeConfig) -> str:
    return (
        f"N={config.n_sites}, a={config.spacing:g}, m={config.mass:g}, "
        f"r={config.wilson_r:g}, {config.boundary.value}"
    )


def check_state_invariants(
    state: CorrelationState, require_pure: bool = False
) -> CheckResult:
    """Report Pauli-bound and purity violations of a state without raising."""
    occ = state.occupations()
    violation = max(0.0, -float(occ[0]), float(occ[-1]) - 1.0)
    if require_pure:
        violation = max(violation, state.purity_defect())
    problems = state.invariant_violations(require_pure=require_pure)
    return CheckResult.evaluate(
        f"state.invariants[{state.label}]",
        violation,
        SPECTRAL_TOL,
        details="; ".join(problems) if problems else "all invariants hold",
    )


def check_vacuum_properties(
    config: LatticeConfig, samples: int = 1000, seed: int = 0
) -> list[CheckResult]:
    """Vacuum energy, vacuum currents, projector structure and the lower bound.

    The lower bound is tested on ``samples`` Haar-random pure Gaussian states
    at half filling drawn from ``default_rng(seed)``.

    Raises
    ------
    ZeroModeError
        If ``h0`` has a zero mode.

    """
    h0, vac, vacuum = free_theory(config)
    tag = _lattice_tag(config)
    results = [
        CheckResult.evaluate(
            "vacuum.free_energy", free_energy(vacuum, h0, vac), ALGEBRAIC_TOL, tag
        )
    ]

    currents = link_currents(vacuum, config)
    results.append(
        CheckResult.evaluate(
            "vacuum.current",
            float(np.max(np.abs(currents))),
            ALGEBRAIC_TOL,
            f"{tag}; raw <J_l> of the filled sea",
        )
    )

    idempotency = float(np.max(np.abs(vac.projector @ vac.projector - vac.projector)))
    rank_defect = abs(vac.rank - config.n_sites)
    results.append(
        CheckResult.evaluate(
            "vacuum.projector",
            max(idempotency, float(rank_defect)),
            ALGEBRAIC_TOL,
            f"{tag}; rank={vac.rank}, |P^2 - P|={idempotency:.2e}",
        )
    )

    rng = np.random.default_rng(seed)
    energies = np.array(
        [free_energy(random_pure_state(vac, rng), h0, vac) for _ in range(samples)]
    )
    lowest = float(energies.min()) if samples else 0.0
    results.append(
        CheckResult.evaluate(
            "vacuum.lower_bound",
            lowest,
            RANDOM_BOUND_TOL,
            f"{tag}; min over {samples} Haar-random states, seed={seed}",
            bound=Bound.LOWER,
            extras={"samples": samples, "seed": seed, "min_energy": lowest},
        )
    )
    return results


def check_current_invariance(
    state: CorrelationState, chi: GaugeFunction, config: LatticeConfig
) -> CheckResult:
    """Compare charge and current expectations before and after ``U_chi``.

    Each observer normal-orders against its own vacuum. Three senses are
    measured: site densities and the gauge-covariant current in ``S_g`` must
    agree exactly; the residual of the bare link current is reported in
    ``extras["bare_residual"]`` and is of order ``a grad chi``.
    """
    _, vac, _ = free_theory(config)
    transformed = apply_gauge(state, chi)
    observer_vac = transform_vacuum(vac, chi, config)
    delta = state.corr - vac.projector
    delta_g = transformed.corr - observer_vac.projector

    densities = site_densities(state, config, vac)
    density_residual = float(
        np.max(np.abs(site_densities(transformed, config, observer_vac) - densities))
    )
    currents = link_current_profile(config, delta)
    bare_residual = float(
        np.max(np.abs(link_current_profile(config, delta_g) - currents))
    )
    covariant = link_current_profile(config, delta_g, gradient_on_links(chi, config))
    covariant_residual = float(np.max(np.abs(covariant - currents)))

    scale = _scale(densities, currents)
    measured = max(density_residual, covariant_residual) / scale
    return CheckResult.evaluate(
        "gauge.current_invariance",
        measured,
        ALGEBRAIC_TOL,
        (
            f"{_lattice_tag(config)}; density={density_residual:.2e}, "
            f"covariant current={covariant_residual:.2e}, "
            f"bare current={bare_residual:.3e}"
        ),
        extras={
            "density_residual": density_residual,
            "covariant_residual": covariant_residual,
            "bare_residual": bare_residual,
        },
    )


def energy_difference_residual(
    state_n: CorrelationState,
    state_m: CorrelationState,
    chi: GaugeFunction,
    config: LatticeConfig,
    scheme: CouplingScheme | str = CouplingScheme.PEIERLS,
) -> float:
    """``[E_S(n) - E_S(m)] - [E_Sg(U n) - E_Sg(U m)]`` (signed)."""
    h0, vac, _ = free_theory(config)
    before = free_energy(state_n, h0, vac) - free_energy(state_m, h0, vac)
    after = sg_energy(
        apply_gauge(state_n, chi), chi, config, h0, vac, scheme
    ) - sg_energy(apply_gauge(state_m, chi), chi, config, h0, vac, scheme)
    return before - after


def check_energy_difference_invariance(
    state_n: CorrelationState,
    state_m: CorrelationState,
    chi: GaugeFunction,
    config: LatticeConfig,
    scheme: CouplingScheme | str = CouplingScheme.PEIERLS,
) -> CheckResult:
    """Energy differences seen by ``S`` and by ``S_g`` after ``U_chi``.

    Exact for the Peierls scheme (identity check). For the linear scheme the
    residual is a probe; its refinement order is measured by
    :func:`dirac_lab.verify.probes.energy_difference_refinement`.
    """
    scheme = CouplingScheme(scheme)
    residual = energy_difference_residual(state_n, state_m, chi, config, scheme)
    exact = scheme is CouplingScheme.PEIERLS
    return CheckResult.evaluate(
        f"gauge.energy_difference[{scheme.value}]",
        residual,
        SPECTRAL_TOL if exact else float("inf"),
        f"{_lattice_tag(config)}; residual={residual:.3e}",
        kind=CheckKind.IDENTITY if exact else CheckKind.PROBE,
    )


def check_integration_by_parts(
    state: CorrelationState, chi: GaugeFunction, config: LatticeConfig
) -> CheckResult:
    """``a sum <J> grad chi + a sum chi div<J> = 0`` exactly."""
    _, vac, _ = free_theory(config)
    currents = link_currents(state, config, vac)
    link_term = config.spacing * float(currents @ gradient_on_links(chi, config).values)
    site_term = config.spacing * float(
        chi.chi @ divergence_of_current(state, config, vac)
    )
    scale = _scale(np.array([link_term, site_term]))
    return CheckResult.evaluate(
        "gauge.integration_by_parts",
        (link_term + site_term) / scale,
        ALGEBRAIC_TOL,
        f"{_lattice_tag(config)}; link sum={link_term:.6e}, site sum={site_term:.6e}",
        extras={"link_sum": link_term, "site_sum": site_term},
    )


def check_conservation(
    state: CorrelationState,
    config: LatticeConfig,
    dt_sequence: list[float] | None = None,
    a0: ScalarPotential | None = None,
    t_final: float = 1.0,
    steps: int = 10,
) -> CheckResult:
    """Energy conservation and the continuity equation under evolution.

    The energy ``Tr(h (C(t) - P_-))`` is sampled on ``steps`` points up to
    ``t_final``. ``d<rho>/dt`` at ``t = 0`` is estimated by central
    differences over ``dt_sequence`` (halvings of 0.01 by default) and
    Richardson-extrapolated before comparing with ``-div<J>``.
    """
    h0, vac, _ = free_theory(config)
    h = h0
    if a0 is not None:
        h = build_coupled_hamiltonian(config, LinkField.zeros(config), a0)
    steps_dt = dt_sequence or [0.01 / 2**k for k in range(5)]

    start = energy_with_potential(state, h, vac)
    drift = max(
        abs(energy_with_potential(evolve(state, h, t), h, vac) - start)
        for t in np.linspace(0.0, t_final, steps + 1)
    )

    div_j = divergence_of_current(state, config)
    estimates = [
        (
            site_densities(evolve(state, h, dt), config)
            - site_densities(evolve(state, h, -dt), config)
        )
        / (2.0 * dt)
        for dt in steps_dt
    ]
    raw_residuals = [float(np.max(np.abs(e + div_j))) for e in estimates]
    table = richardson_table(estimates)
    extrapolated = float(np.max(np.abs(table[-1, -1] + div_j)))

    potential = "free" if a0 is None else f"A0={a0.label or 'custom'}"
    return CheckResult.evaluate(
        "conservation",
        max(drift, extrapolated),
        SPECTRAL_TOL,
        (
            f"{_lattice_tag(config)}; {potential}; energy drift={drift:.2e} over "
            f"t={t_final:g}, continuity residual={extrapolated:.2e} (extrapolated)"
        ),
        extras={
            "energy_drift": drift,
            "continuity_residuals": raw_residuals,
            "continuity_extrapolated": extrapolated,
            "dt_sequence": list(steps_dt),
        },
    )


def check_sg_lower_bound(
    chi: GaugeFunction, config: LatticeConfig, samples: int = 200, seed: int = 0
) -> CheckResult:
    """Observer ``S_g`` sees ``U_chi|0>`` as its lowest-energy state.

    Evaluates the Peierls ``sg_energy`` of Haar-random pure states and checks
    it never drops below that of the transformed vacuum.
    """
    h0, vac, vacuum = free_theory(config)
    reference = sg_energy(apply_gauge(vacuum, chi), chi, config, h0, vac)
    rng = np.random.default_rng(seed)
    margins = [
        sg_energy(random_pure_state(vac, rng), chi, config, h0, vac) - reference
        for _ in range(samples)
    ]
    lowest = float(min(margins, default=0.0))
    return CheckResult.evaluate(
        "gauge.sg_lower_bound",
        lowest,
        RANDOM_BOUND_TOL,
        f"{_lattice_tag(config)}; {samples} Haar-random states, seed={seed}",
        bound=Bound.LOWER,
        extras={"seed": seed, "samples": samples, "reference": reference},
    )


def check_kernel_identities(
    config: LatticeConfig, seed: int = 0
) -> list[CheckResult]:
    """Operator-level identities of the lattice kernels."""
    h0, _, _ = free_theory(config)
    h = h0.matrix
    tag = _lattice_tag(config)
    scale = _scale(h)
    results = [
        CheckResult.evaluate(
            "kernel.hermitian",
            float(np.max(np.abs(h - h.conj().T))) / scale,
            ALGEBRAIC_TOL,
            tag,
        )
    ]

    if config.boundary is Boundary.PERIODIC:
        shift = translation_operator(config)
        results.append(
            CheckResult.evaluate(
                "kernel.translation",
                float(np.max(np.abs(shift @ h @ shift.conj().T - h))) / scale,
                ALGEBRAIC_TOL,
                tag,
            )
        )

    gamma = charge_conjugation(config)
    conjugated = gamma @ h @ gamma.conj().T
    spectrum_gap = float(
        np.max(np.abs(np.linalg.eigvalsh(h) - np.linalg.eigvalsh(-conjugated)))
    )
    results.append(
        CheckResult.evaluate(
            "kernel.charge_conjugation",
            max(float(np.max(np.abs(conjugated + h))), spectrum_gap) / scale,
            ALGEBRAIC_TOL,
            f"{tag}; Gamma = 1 (x) sigma_y",
        )
    )

    continuity = 0.0
    currents = [current_kernel(config, link).matrix for link in range(config.n_links)]
    zero = np.zeros_like(h)
    for site in range(config.n_sites):
        rho = charge_density_kernel(config, site).matrix
        outgoing = currents[site] if site < config.n_links else zero
        incoming_link = (site - 1) % config.n_sites
        incoming = currents[incoming_link] if incoming_link < config.n_links else zero
        residual = 1j * (h @ rho - rho @ h) + (outgoing - incoming) / config.spacing
        continuity = max(continuity, float(np.max(np.abs(residual))))
    results.append(
        CheckResult.evaluate(
            "kernel.continuity",
            continuity / scale,
            ALGEBRAIC_TOL,
            f"{tag}; max_i |i[h0, rho_i] + (J_i - J_(i-1))/a|",
        )
    )

    rng = np.random.default_rng(seed)
    a_field = LinkField(values=rng.normal(0.0, 0.5, config.n_links), label="random")
    chi = GaugeFunction.random(config, rng)
    shifted = LinkField(
        values=a_field.values + gradient_on_links(chi, config).values, label="shifted"
    )
    zero_a0 = ScalarPotential.zeros(config)
    lhs = make_unitary(chi, config).inverse().conjugate(
        build_coupled_hamiltonian(config, shifted, zero_a0).matrix
    )
    rhs = build_coupled_hamiltonian(config, a_field, zero_a0).matrix
    results.append(
        CheckResult.evaluate(
            "kernel.peierls_covariance",
            float(np.max(np.abs(lhs - rhs))) / scale,
            ALGEBRAIC_TOL,
            f"{tag}; random A and chi, seed={seed}",
        )
    )
    return results
