"""Tests for lattice data models."""

import numpy as np
import pytest

from dirac_lab.lattice import (
    Boundary,
    LatticeConfig,
    LatticeError,
    LinkField,
    ScalarPotential,
    SingleParticleOperator,
)


class TestLatticeConfig:
    """Test suite for LatticeConfig."""

    def test_derived_sizes_periodic(self):
        """Periodic chains have one link per site."""
        config = LatticeConfig(n_sites=8, spacing=0.5, mass=1.0)
        assert config.dim == 16
        assert config.length == pytest.approx(4.0)
        assert config.n_links == 8
        assert config.link_ends(7) == (7, 0)
        assert config.charge == 1

    def test_derived_sizes_open(self):
        """Open chains have no wrap-around link."""
        config = LatticeConfig(n_sites=8, spacing=0.5, mass=1.0, boundary="open")
        assert config.boundary is Boundary.OPEN
        assert config.n_links == 7
        with pytest.raises(LatticeError):
            config.link_ends(7)

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"n_sites": 1, "spacing": 1.0, "mass": 1.0},
            {"n_sites": 4, "spacing": 0.0, "mass": 1.0},
            {"n_sites": 4, "spacing": 1.0, "mass": -0.1},
            {"n_sites": 4, "spacing": 1.0, "mass": 1.0, "wilson_r": 0.0},
            {"n_sites": 4, "spacing": 1.0, "mass": 1.0, "wilson_r": 1.5},
        ],
    )
    def test_invalid_config_rejected(self, kwargs):
        """Out-of-range parameters raise LatticeError."""
        with pytest.raises(LatticeError):
            LatticeConfig(**kwargs)

    def test_with_spacing_keeps_length(self):
        """Halving the spacing doubles the sites."""
        config = LatticeConfig(n_sites=8, spacing=0.5, mass=1.0)
        fine = config.with_spacing(0.25)
        assert fine.n_sites == 16
        assert fine.length == pytest.approx(config.length)
        assert fine.mass == config.mass

    def test_with_spacing_rejects_non_divisor(self):
        """A spacing that does not divide L is rejected."""
        config = LatticeConfig(n_sites=8, spacing=0.5, mass=1.0)
        with pytest.raises(LatticeError):
            config.with_spacing(0.3)

    def test_dict_round_trip(self):
        """to_dict and from_dict are inverse."""
        config = LatticeConfig(n_sites=6, spacing=0.25, mass=0.5, wilson_r=0.5)
        assert LatticeConfig.from_dict(config.to_dict()) == config


class TestFields:
    """Test suite for LinkField, ScalarPotential and SingleParticleOperator."""

    def test_zero_fields_match_lattice(self):
        """zeros() sizes follow the boundary convention."""
        config = LatticeConfig(n_sites=5, spacing=1.0, mass=1.0, boundary="open")
        assert len(LinkField.zeros(config)) == 4
        assert len(ScalarPotential.zeros(config)) == 5
        np.testing.assert_array_equal(
            ScalarPotential.constant(config, 0.3).values, np.full(5, 0.3)
        )

    def test_non_hermitian_operator_rejected(self):
        """Kernels must be Hermitian."""
        with pytest.raises(ValueError):
            SingleParticleOperator(matrix=np.array([[0, 1], [0, 0]], dtype=complex))

    def test_operator_serialization(self):
        """Kernels serialize as row-major [re, im] pairs."""
        matrix = np.array([[1, 1j], [-1j, 2]], dtype=complex)
        op = SingleParticleOperator(matrix=matrix, label="k")
        data = op.to_dict()
        assert data["entries"][1] == [0.0, 1.0]
        np.testing.assert_array_equal(SingleParticleOperator.from_dict(data).matrix, matrix)
