"""Tests for the single-lattice identity checks."""

import numpy as np
import pytest

from dirac_lab.gauge import GaugeFunction
from dirac_lab.gaussian import CorrelationState, free_theory, random_pure_state, wavepacket_state
from dirac_lab.lattice import LatticeConfig, ScalarPotential
from dirac_lab.verify import (
    Bound,
    CheckKind,
    check_conservation,
    check_current_invariance,
    check_energy_difference_invariance,
    check_integration_by_parts,
    check_kernel_identities,
    check_sg_lower_bound,
    check_state_invariants,
    check_vacuum_properties,
)


@pytest.fixture(params=["periodic", "open"])
def config(request):
    """Sixteen sites at a = 0.5."""
    return LatticeConfig(n_sites=16, spacing=0.5, mass=1.0, boundary=request.param)


@pytest.fixture
def wavepacket(config):
    """Vacuum plus one wavepacket particle at L/2."""
    _, _, vacuum = free_theory(config)
    return wavepacket_state(config, vacuum, 0.5 * config.length, 1.5, 0.25)


@pytest.fixture
def chi(config):
    """Smooth gauge function."""
    return GaugeFunction.sine(config, 0.5)


class TestKernelAndVacuum:
    """Test suite for kernel identities and vacuum properties."""

    def test_kernel_identities_pass(self, config):
        """Hermiticity, symmetries, continuity and covariance hold."""
        results = check_kernel_identities(config, seed=3)
        assert all(r.passed for r in results), [r.name for r in results if not r.passed]
        names = {r.name for r in results}
        assert "kernel.continuity" in names
        assert ("kernel.translation" in names) == (config.boundary.value == "periodic")

    def test_vacuum_properties_pass(self, config):
        """Zero energy, zero current, projector, lower bound."""
        results = check_vacuum_properties(config, samples=50, seed=1)
        assert [r.name for r in results] == [
            "vacuum.free_energy",
            "vacuum.current",
            "vacuum.projector",
            "vacuum.lower_bound",
        ]
        assert all(r.passed for r in results)
        bound = results[-1]
        assert bound.bound is Bound.LOWER
        assert bound.measured > 0.0


class TestStateInvariants:
    """Test suite for check_state_invariants."""

    def test_pure_state_passes(self, config):
        """A Haar-random rotation of the vacuum is pure."""
        _, vac, _ = free_theory(config)
        state = random_pure_state(vac, np.random.default_rng(0))
        assert check_state_invariants(state, require_pure=True).passed

    def test_mixed_state_reported(self, config):
        """Half-filled identity violates purity without raising."""
        state = CorrelationState(corr=0.5 * np.eye(config.dim), label="mixed")
        assert check_state_invariants(state).passed
        result = check_state_invariants(state, require_pure=True)
        assert not result.passed
        assert result.name == "state.invariants[mixed]"


class TestGaugeChecks:
    """Test suite for gauge-invariance checks."""

    def test_current_invariance(self, config, wavepacket, chi):
        """Densities and covariant currents agree; the bare current does not."""
        result = check_current_invariance(wavepacket, chi, config)
        assert result.passed
        assert result.extras["bare_residual"] > 1e-6

    def test_integration_by_parts(self, config, wavepacket, chi):
        """Summation by parts is exact."""
        result = check_integration_by_parts(wavepacket, chi, config)
        assert result.passed
        assert result.extras["link_sum"] == pytest.approx(-result.extras["site_sum"])

    def test_peierls_energy_difference_exact(self, config, wavepacket, chi):
        """Peierls energy differences are invariant."""
        _, _, vacuum = free_theory(config)
        result = check_energy_difference_invariance(wavepacket, vacuum, chi, config)
        assert result.passed
        assert result.kind is CheckKind.IDENTITY

    def test_linear_energy_difference_is_probe(self, config, wavepacket, chi):
        """The linear scheme residual is reported, never gated."""
        _, _, vacuum = free_theory(config)
        result = check_energy_difference_invariance(
            wavepacket, vacuum, chi, config, "linear"
        )
        assert result.kind is CheckKind.PROBE
        assert not result.gates_exit
        assert result.measured != 0.0

    def test_sg_lower_bound(self, config, chi):
        """U|0> is the lowest state seen by the observer."""
        result = check_sg_lower_bound(chi, config, samples=30, seed=2)
        assert result.passed
        assert result.measured > 0.0


class TestConservation:
    """Test suite for check_conservation."""

    def test_free_evolution(self, config, wavepacket):
        """Energy is conserved and continuity holds."""
        result = check_conservation(wavepacket, config, t_final=0.5, steps=5)
        assert result.passed
        residuals = result.extras["continuity_residuals"]
        assert residuals[-1] < residuals[0]

    def test_static_potential(self, config, wavepacket):
        """A static A0 keeps both identities."""
        a0 = ScalarPotential(values=0.3 * np.cos(config.positions), label="cos")
        result = check_conservation(wavepacket, config, a0=a0, t_final=0.5, steps=5)
        assert result.passed
        assert "A0=cos" in result.details


class TestVacuumAtScale:
    """Vacuum lower bound over a thousand Haar-random states."""

    def test_thousand_random_states(self):
        """No random pure state at N = 32 goes below the vacuum."""
        config = LatticeConfig(n_sites=32, spacing=0.5, mass=1.0)
        results = {r.name: r for r in check_vacuum_properties(config, samples=1000, seed=0)}
        assert all(r.passed for r in results.values())
        bound = results["vacuum.lower_bound"]
        assert bound.extras["samples"] == 1000
        assert bound.measured > 0.0


@pytest.mark.parametrize("n_sites", [16, 32, 64])
class TestRandomPeierlsIdentities:
    """Peierls identities for Haar-random states and random gauge functions."""

    @pytest.fixture
    def lattice(self, n_sites):
        """Periodic chain at a = 0.5."""
        return LatticeConfig(n_sites=n_sites, spacing=0.5, mass=1.0)

    @pytest.fixture
    def draws(self, lattice, n_sites):
        """Two random pure states and a random chi from one generator."""
        rng = np.random.default_rng(n_sites)
        _, vac, _ = free_theory(lattice)
        first = random_pure_state(vac, rng, label="first")
        second = random_pure_state(vac, rng, label="second")
        return first, second, GaugeFunction.random(lattice, rng)

    def test_hamiltonian_covariance(self, lattice, n_sites):
        """G^dag h[A + grad chi] G = h[A] for random A and chi."""
        results = {r.name: r for r in check_kernel_identities(lattice, seed=n_sites)}
        covariance = results["kernel.peierls_covariance"]
        assert covariance.passed
        assert covariance.measured <= 1e-10

    def test_current_invariance(self, lattice, draws):
        """Densities and the covariant current survive a random gauge change."""
        state, _, chi = draws
        result = check_current_invariance(state, chi, lattice)
        assert result.measured <= 1e-10
        assert result.extras["density_residual"] <= 1e-10
        assert result.extras["covariant_residual"] <= 1e-10

    def test_energy_difference(self, lattice, draws):
        """Energy differences agree between the two observers."""
        first, second, chi = draws
        result = check_energy_difference_invariance(first, second, chi, lattice)
        assert result.passed
        assert abs(result.measured) <= 1e-10
