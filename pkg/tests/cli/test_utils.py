"""Tests for CLI utility functions."""

from importlib.metadata import PackageNotFoundError
from unittest.mock import patch

import pytest

from dirac_lab._cli.utils import (
    ExitCode,
    exit_code_for,
    formats_for,
    get_version,
    report_failure,
    resolve_run,
)
from dirac_lab.config import ConfigParseError, ConfigSchemaError
from dirac_lab.counterexample import DegenerateConstructionError


class TestGetVersion:
    """Test suite for get_version function."""

    def test_get_version_installed(self):
        """Returns the installed version."""
        with patch("dirac_lab._cli.utils.version") as mock_version:
            mock_version.return_value = "1.2.3"
            assert get_version() == "1.2.3"
            mock_version.assert_called_once_with("dirac-gauge-lab")

    def test_get_version_not_installed(self):
        """Falls back to 'unknown'."""
        with patch("dirac_lab._cli.utils.version") as mock_version:
            mock_version.side_effect = PackageNotFoundError()
            assert get_version() == "unknown"


class TestExitCodes:
    """Test suite for exception to exit-status mapping."""

    @pytest.mark.parametrize(
        ("exc", "code"),
        [
            (ConfigParseError("bad", 1, 2), ExitCode.CONFIG_PARSE),
            (ConfigSchemaError("seed", "bad"), ExitCode.CONFIG_SCHEMA),
            (FileNotFoundError("missing"), ExitCode.FILESYSTEM),
            (DegenerateConstructionError("flat"), ExitCode.DEGENERATE),
            (RuntimeError("boom"), ExitCode.ERROR),
        ],
    )
    def test_mapping(self, exc, code):
        """Each failure class has its own status."""
        assert exit_code_for(exc) is code

    def test_report_failure_logs(self):
        """report_failure logs the message and returns the status."""
        with patch("dirac_lab._cli.utils.log_error") as mock_error:
            code = report_failure(ConfigSchemaError("chi.kind", "unknown"))
        assert code is ExitCode.CONFIG_SCHEMA
        mock_error.assert_called_once_with("chi.kind: unknown")


class TestResolveRun:
    """Test suite for command-line overrides."""

    def test_formats_for(self):
        """'both' expands; None keeps the config."""
        assert formats_for("both") == ["csv", "json"]
        assert formats_for("json") == ["json"]
        assert formats_for(None) is None

    def test_overrides(self, small_config):
        """--seed, --out and --format override the file."""
        path, _ = small_config("seed: 2")
        run = resolve_run(path, seed=8, out="elsewhere/x", fmt="csv")
        assert run.seed == 8
        assert run.output.prefix == "elsewhere/x"
        assert [f.value for f in run.output.formats] == ["csv"]

    def test_env_seed(self, small_config, monkeypatch):
        """$DIRAC_LAB_SEED beats the file."""
        path, _ = small_config("seed: 2")
        monkeypatch.setenv("DIRAC_LAB_SEED", "6")
        assert resolve_run(path).seed == 6
