"""Tests for verification result models."""

import math

import pytest

from dirac_lab.lattice import LatticeConfig
from dirac_lab.verify import (
    Bound,
    CheckKind,
    CheckResult,
    ConvergenceFit,
    EnergyShiftStudy,
    RefinementCase,
)


def _fit(errors, spacings=(0.5, 0.25)):
    return ConvergenceFit(
        spacings=list(spacings), errors=list(errors), fitted_order=1.0, r_squared=1.0
    )


class TestCheckResult:
    """Test suite for CheckResult."""

    def test_abs_bound(self):
        """ABS passes when |measured| <= tolerance."""
        assert CheckResult.evaluate("x", -1e-13, 1e-12).passed
        assert not CheckResult.evaluate("x", 2e-12, 1e-12).passed

    def test_lower_bound(self):
        """LOWER passes when measured >= -tolerance."""
        assert CheckResult.evaluate("x", 5.0, 1e-9, bound=Bound.LOWER).passed
        assert not CheckResult.evaluate("x", -1e-6, 1e-9, bound=Bound.LOWER).passed

    def test_probes_never_gate(self):
        """Only failing identity checks gate the exit status."""
        probe = CheckResult(name="p", passed=False, measured=1.0, tolerance=0.0, kind=CheckKind.PROBE)
        identity = CheckResult(name="i", passed=False, measured=1.0, tolerance=0.0)
        assert not probe.gates_exit
        assert identity.gates_exit

    def test_to_dict(self):
        """Enums serialize to their values."""
        data = CheckResult.evaluate("x", 0.0, 1e-12, bound=Bound.LOWER).to_dict()
        assert data["kind"] == "identity"
        assert data["bound"] == "lower"
        assert data["passed"] is True


class TestConvergenceFit:
    """Test suite for ConvergenceFit."""

    def test_spacings_must_decrease(self):
        """Refinement goes from coarse to fine."""
        with pytest.raises(ValueError):
            _fit([1.0, 0.5], spacings=(0.25, 0.5))

    def test_errors_nonnegative(self):
        """Errors are magnitudes."""
        with pytest.raises(ValueError):
            _fit([1.0, -0.5])

    def test_lengths_match(self):
        """One error per spacing."""
        with pytest.raises(ValueError):
            _fit([1.0])


class TestRefinementCase:
    """Test suite for RefinementCase."""

    def test_configs_halve_spacing(self):
        """Levels halve the spacing at fixed length."""
        base = LatticeConfig(n_sites=8, spacing=0.5, mass=1.0)
        case = RefinementCase(base=base, state=lambda c, h, v: v.as_state(), chi=None, levels=4)
        configs = list(case.configs())
        assert [c.spacing for c in configs] == [0.5, 0.25, 0.125, 0.0625]
        assert {c.length for c in configs} == {4.0}

    def test_too_few_levels(self):
        """At least two spacings are needed to fit."""
        base = LatticeConfig(n_sites=8, spacing=0.5, mass=1.0)
        with pytest.raises(ValueError):
            RefinementCase(base=base, state=None, chi=None, levels=1)


class TestEnergyShiftStudy:
    """Test suite for EnergyShiftStudy."""

    def test_plateau_deviation(self):
        """Relative distance of the finest bare residual from P."""
        study = EnergyShiftStudy(
            with_vacuum_term=_fit([0.1, 0.05]),
            without_vacuum_term=_fit([1.1, 1.02]),
            vacuum_energies=[1.0, 1.0],
        )
        assert study.plateau_deviation == pytest.approx(0.02)
        assert study.to_dict()["plateau_deviation"] == pytest.approx(0.02)

    def test_zero_plateau_is_nan(self):
        """No plateau to compare against when P = 0."""
        study = EnergyShiftStudy(
            with_vacuum_term=_fit([0.0, 0.0]),
            without_vacuum_term=_fit([0.0, 0.0]),
            vacuum_energies=[0.0, 0.0],
        )
        assert math.isnan(study.plateau_deviation)
