"""Tests for run configuration loading and validation."""

from pathlib import Path
from unittest.mock import patch

import numpy as np
import pytest

from dirac_lab.config import (
    ChiKind,
    ConfigParseError,
    ConfigSchemaError,
    OutputFormat,
    RunConfig,
    SchemeChoice,
    StateKind,
    load_run_config,
    resolve_seed,
)
from dirac_lab.gaussian import free_energy, free_theory
from dirac_lab.lattice import LatticeConfig


@pytest.fixture
def write_config(tmp_path):
    """Write YAML text to a temporary file and return its path."""

    def _write(text: str) -> str:
        path = tmp_path / "run.yaml"
        path.write_text(text)
        return str(path)

    return _write


class TestDefaults:
    """Test suite for built-in defaults."""

    def test_no_file_gives_defaults(self):
        """Without a path or env var every default applies."""
        with patch.dict("os.environ", {}, clear=True):
            run = load_run_config(None)
        assert run == RunConfig.default()
        assert run.lattice == LatticeConfig(n_sites=16, spacing=0.5, mass=1.0)
        assert run.scheme is SchemeChoice.BOTH
        assert run.schemes() == ["peierls", "linear"]
        assert run.sweep.amplitudes()[:2] == [0.0, 10.0]

    def test_empty_file_gives_defaults(self, write_config):
        """An empty document is an empty mapping."""
        assert load_run_config(write_config("")) == RunConfig.default()

    def test_env_var_path(self, write_config):
        """$DIRAC_LAB_CONFIG is used when no path is passed."""
        path = write_config("seed: 9\n")
        with patch.dict("os.environ", {"DIRAC_LAB_CONFIG": path}):
            assert load_run_config(None).seed == 9


class TestParsing:
    """Test suite for parsing full configuration files."""

    def test_full_file(self, write_config):
        """Every section is read and typed."""
        run = load_run_config(
            write_config(
                """
lattice: {n_sites: 8, spacing: 0.25, mass: 0.5, boundary: open}
state: {kind: random, seed: 4}
chi: {kind: bump, amplitude: 0.3, width: 0.5}
scheme: linear
sweep: {values: [0, 1, 2.5], workers: 2}
refinement: 3
output: {prefix: out/run, formats: [json]}
seed: 12
verify: {samples: 10, oracle: false}
"""
            )
        )
        assert run.lattice.boundary.value == "open"
        assert run.lattice.length == pytest.approx(2.0)
        assert run.state.kind is StateKind.RANDOM
        assert run.state.seed == 4
        assert isinstance(run.state.seed, int)
        assert run.chi.kind is ChiKind.BUMP
        assert run.schemes() == ["linear"]
        assert run.sweep.amplitudes() == [0.0, 1.0, 2.5]
        assert run.output.formats == (OutputFormat.JSON,)
        assert run.verify.oracle is False
        assert run.verify.sg_samples == 200

    def test_parse_error_location(self, write_config):
        """YAML errors carry a 1-based line and column."""
        with pytest.raises(ConfigParseError) as info:
            load_run_config(write_config("seed: 1\nlattice: [1, 2\n"))
        assert info.value.line is not None
        assert info.value.line >= 2
        assert "line" in str(info.value)

    def test_missing_file(self, tmp_path):
        """An unreadable path raises OSError."""
        with pytest.raises(OSError):
            load_run_config(str(tmp_path / "absent.yaml"))


class TestSchema:
    """Test suite for schema violations."""

    @pytest.mark.parametrize(
        ("text", "path"),
        [
            ("colour: red\n", "colour"),
            ("lattice: {n_sites: 8, spin: 1}\n", "lattice.spin"),
            ("state: {kind: thermal}\n", "state.kind"),
            ("lattice: {n_sites: 1}\n", "lattice"),
            ("lattice: {n_sites: 2.5}\n", "lattice.n_sites"),
            ("verify: {oracle: 1}\n", "verify.oracle"),
            ("verify: {samples: true}\n", "verify.samples"),
            ("verify: {oracle_sites: 5}\n", "verify.oracle_sites"),
            ("sweep: {workers: 0}\n", "sweep.workers"),
            ("sweep: {values: 3}\n", "sweep.values"),
            ("refinement: 1\n", "refinement"),
            ("seed: null\n", "seed"),
            ("seed: -1\n", "seed"),
            ("seed: 18446744073709551616\n", "seed"),
            ("state: {kind: random, seed: -3}\n", "state.seed"),
            ("chi: {amplitude: null}\n", "chi.amplitude"),
            ("output: {formats: [xml]}\n", "output.formats"),
            ("- just\n- a list\n", "<root>"),
        ],
    )
    def test_violation_path(self, write_config, text, path):
        """Each violation names the offending key."""
        with pytest.raises(ConfigSchemaError) as info:
            load_run_config(write_config(text))
        assert info.value.path == path

    def test_optional_values_accept_null(self):
        """Keys whose default is None accept null."""
        run = RunConfig.from_mapping({"chi": {"wavelength": None}, "state": {"seed": None}})
        assert run.chi.wavelength is None
        assert run.state.seed is None


class TestOverrides:
    """Test suite for seed precedence and output overrides."""

    def test_seed_precedence(self):
        """CLI beats environment beats file."""
        run = RunConfig.default().with_seed(5)
        with patch.dict("os.environ", {"DIRAC_LAB_SEED": "7"}):
            assert resolve_seed(3, run) == 3
            assert resolve_seed(None, run) == 7
        with patch.dict("os.environ", {}, clear=True):
            assert resolve_seed(None, run) == 5

    def test_bad_env_seed(self):
        """A non-integer env seed is a schema error."""
        with (
            patch.dict("os.environ", {"DIRAC_LAB_SEED": "abc"}),
            pytest.raises(ConfigSchemaError),
        ):
            resolve_seed(None, RunConfig.default())

    def test_negative_env_seed(self):
        """A negative env seed is rejected before any draw."""
        with (
            patch.dict("os.environ", {"DIRAC_LAB_SEED": "-4"}),
            pytest.raises(ConfigSchemaError) as info,
        ):
            resolve_seed(None, RunConfig.default())
        assert info.value.path == "DIRAC_LAB_SEED"

    def test_with_output(self):
        """Prefix and formats can be overridden separately."""
        run = RunConfig.default().with_output(prefix="x/y")
        assert run.output.prefix == "x/y"
        assert run.output.formats == (OutputFormat.CSV, OutputFormat.JSON)
        assert run.with_output(formats=["csv"]).output.formats == (OutputFormat.CSV,)

    def test_to_dict_is_plain(self):
        """Provenance holds plain values only."""
        data = RunConfig.default().to_dict()
        assert data["lattice"]["boundary"] == "periodic"
        assert "charge" not in data["lattice"]
        assert data["state"]["kind"] == "wavepacket"
        assert data["output"]["formats"] == ["csv", "json"]


class TestRecipes:
    """Test suite for state and gauge recipes."""

    def test_wavepacket_centred(self):
        """The default wavepacket carries one particle of positive energy."""
        run = RunConfig.default()
        config = run.lattice
        h0, vac, _ = free_theory(config)
        state = run.state_recipe()(config, h0, vac)
        assert state.particle_number() == pytest.approx(config.n_sites + 1)
        assert free_energy(state, h0, vac) > config.mass * 0.99

    def test_random_state_uses_seed(self):
        """The random recipe is reproducible from the run seed."""
        run = RunConfig.from_mapping({"state": {"kind": "random"}, "seed": 3})
        config = run.lattice
        h0, vac, _ = free_theory(config)
        first = run.state_recipe()(config, h0, vac)
        second = run.state_recipe()(config, h0, vac)
        np.testing.assert_allclose(first.corr, second.corr)

    @pytest.mark.parametrize("kind", ["constant", "sine", "bump", "from_current"])
    def test_chi_recipes_resample(self, kind):
        """Recipes sample on any lattice of the refinement."""
        run = RunConfig.from_mapping({"chi": {"kind": kind, "value": 0.2}})
        recipe = run.chi_recipe()
        fine = run.lattice.with_spacing(run.lattice.spacing / 2)
        assert len(recipe(run.lattice)) == run.lattice.n_sites
        assert len(recipe(fine)) == fine.n_sites
        assert recipe(run.lattice).is_constant() == (kind == "constant")

    def test_samples_recipe(self):
        """Explicit samples are used verbatim."""
        run = RunConfig.from_mapping({"chi": {"kind": "samples", "samples": [0, 1]}})
        assert list(run.chi_recipe()(run.lattice).chi) == [0.0, 1.0]


class TestShippedConfigs:
    """Test suite for the example files under configs/."""

    def test_default_file_matches_defaults(self):
        """configs/default.yaml spells out RunConfig.default()."""
        path = Path(__file__).parents[1] / "configs" / "default.yaml"
        assert load_run_config(str(path)) == RunConfig.default()

    def test_quick_file_loads(self):
        """configs/quick.yaml is valid."""
        path = Path(__file__).parents[1] / "configs" / "quick.yaml"
        run = load_run_config(str(path))
        assert run.lattice.n_sites == 8
        assert run.verify.oracle_sites == 3
