"""Tests for the sweep command."""

import csv
import json
from pathlib import Path

from click.testing import CliRunner

from dirac_lab._cli.main import cli


class TestSweepCLI:
    """Test suite for sweep command."""

    def test_sweep_writes_rows(self, small_config):
        """One row per amplitude, columns in fixed order."""
        path, prefix = small_config()
        result = CliRunner().invoke(cli, ["sweep", "--config", path])

        assert result.exit_code == 0, result.output
        with open(f"{prefix}.csv") as f:
            rows = list(csv.reader(f))
        assert rows[0] == [
            "f",
            "linear_prediction",
            "exact_peierls",
            "exact_linear",
            "transformed_free",
            "gap",
        ]
        assert [float(r[0]) for r in rows[1:]] == [0.0, 5.0, 10.0]

        report = json.loads(Path(f"{prefix}.json").read_text())
        assert report["kind"] == "sweep"
        assert "rows" not in report["summary"]
        free = report["summary"]["free_energy"]
        for row in report["rows"]:
            assert abs(row["exact_peierls"] - free) < 1e-8

    def test_vacuum_is_degenerate(self, small_config):
        """The vacuum has no current divergence: exit status 6."""
        path, _ = small_config()
        text = Path(path).read_text().replace("kind: wavepacket, ", "kind: vacuum, ")
        Path(path).write_text(text)
        result = CliRunner().invoke(cli, ["sweep", "--config", path])
        assert result.exit_code == 6

    def test_curvature_stable_across_seeds(self, small_config):
        """Crossover and curvature do not move with the run seed."""
        path, prefix = small_config()
        summaries = []
        for seed in ("0", "17", "123456789"):
            result = CliRunner().invoke(
                cli, ["sweep", "--config", path, "--seed", seed, "--format", "json"]
            )
            assert result.exit_code == 0, result.output
            summaries.append(json.loads(Path(f"{prefix}.json").read_text())["summary"])
        assert summaries[0]["gap_curvature"] is not None
        for summary in summaries[1:]:
            assert summary["gap_curvature"] == summaries[0]["gap_curvature"]
            assert summary["crossover"] == summaries[0]["crossover"]

    def test_reports_are_byte_identical(self, small_config):
        """The same config and seed reproduce both reports byte for byte."""
        path, prefix = small_config()
        outputs = []
        for _ in range(2):
            result = CliRunner().invoke(cli, ["sweep", "--config", path, "--seed", "4"])
            assert result.exit_code == 0, result.output
            outputs.append(
                (Path(f"{prefix}.csv").read_bytes(), Path(f"{prefix}.json").read_bytes())
            )
        assert outputs[0] == outputs[1]
