"""Tests comparing the correlation-matrix engine with the Fock oracle."""

import numpy as np
import pytest

from dirac_lab.gaussian import free_energy, free_theory, random_pure_state
from dirac_lab.lattice import LatticeConfig
from dirac_lab.verify import FockDimensionError, fock_oracle_compare, oracle_state_energy


class TestFockOracleCompare:
    """Test suite for fock_oracle_compare."""

    @pytest.mark.parametrize("n_sites", [2, 3, 4])
    def test_engine_matches_oracle(self, n_sites):
        """Every quantity agrees with the Fock build to 1e-10."""
        config = LatticeConfig(n_sites=n_sites, spacing=1.0, mass=1.0)
        results = fock_oracle_compare(config, trials=4, seed=7)
        failures = [(r.name, r.measured) for r in results if not r.passed]
        assert failures == []
        names = {r.name for r in results}
        assert "oracle.sg_energy[peierls]" in names
        assert "oracle.sg_energy_free_frame[linear]" in names
        assert "oracle.evolution" in names

    def test_open_chain(self):
        """Open chains agree as well."""
        config = LatticeConfig(n_sites=3, spacing=0.5, mass=0.5, boundary="open")
        assert all(r.passed for r in fock_oracle_compare(config, trials=3, seed=1))

    def test_results_are_ordered_by_name(self):
        """Results come back sorted for deterministic merging."""
        config = LatticeConfig(n_sites=2, spacing=1.0, mass=1.0)
        names = [r.name for r in fock_oracle_compare(config, trials=1)]
        assert names == sorted(names)

    def test_too_many_sites(self):
        """N > 4 is refused."""
        with pytest.raises(FockDimensionError):
            fock_oracle_compare(LatticeConfig(n_sites=5, spacing=1.0, mass=1.0), trials=1)

    def test_state_energy(self):
        """Random pure state, N=4: free energy matches the oracle."""
        config = LatticeConfig(n_sites=4, spacing=1.0, mass=1.0)
        h0, vac, _ = free_theory(config)
        state = random_pure_state(vac, np.random.default_rng(3))
        assert oracle_state_energy(state, config) == pytest.approx(
            free_energy(state, h0, vac), abs=1e-10
        )
