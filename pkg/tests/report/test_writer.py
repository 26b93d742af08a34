"""Tests for the CSV and JSON report writers."""

import json
import math

import numpy as np
import pytest

from dirac_lab.report import ExperimentReport, ReportKind, ReportWriter, format_cell, sanitize


@pytest.fixture
def report():
    """Small sweep-like report with a NaN and a numpy scalar."""
    return ExperimentReport(
        kind=ReportKind.SWEEP,
        config={"lattice": {"n_sites": 4}},
        seed=11,
        columns=("f", "gap", "ok"),
        rows=[
            {"f": 0.0, "gap": np.float64(0.1), "ok": True},
            {"f": 2.5, "gap": float("nan"), "ok": False},
        ],
        summary={"crossover": None, "curvature": np.float64(math.inf)},
    )


class TestSanitize:
    """Test suite for sanitize and format_cell."""

    def test_nested_numpy_and_nonfinite(self):
        """numpy types become Python types; NaN and inf become None."""
        value = sanitize(
            {"a": np.arange(3), "b": (np.float64(1.5), float("nan")), 4: np.bool_(True)}
        )
        assert value == {"a": [0, 1, 2], "b": [1.5, None], "4": True}
        assert isinstance(value["a"][0], int)

    def test_format_cell(self):
        """Floats keep 17 significant digits; booleans are lowercase."""
        assert format_cell(0.1) == "0.10000000000000001"
        assert format_cell(np.float64(1.0) / 3) == "0.33333333333333331"
        assert format_cell(True) == "true"
        assert format_cell(None) == ""
        assert format_cell(np.int64(7)) == "7"
        assert format_cell("peierls") == "peierls"


class TestReportWriter:
    """Test suite for ReportWriter."""

    def test_csv_header_and_order(self, report, tmp_path):
        """Header first, columns in order, NaN as an empty cell."""
        path = tmp_path / "out.csv"
        ReportWriter.save_csv(report, str(path))
        assert path.read_text().splitlines() == [
            "f,gap,ok",
            "0,0.10000000000000001,true",
            "2.5,,false",
        ]

    def test_json_nulls(self, report, tmp_path):
        """Non-finite values are written as null."""
        path = tmp_path / "out.json"
        ReportWriter.save_json(report, str(path))
        text = path.read_text()
        assert text.endswith("}\n")
        data = json.loads(text)
        assert data["rows"][1]["gap"] is None
        assert data["summary"]["curvature"] is None
        assert data["seed"] == 11

    def test_write_creates_directories(self, report, tmp_path):
        """Parent directories are created and paths come back in order."""
        prefix = tmp_path / "nested" / "deeper" / "run"
        paths = ReportWriter.write(report, str(prefix), ["json", "csv"])
        assert paths == [f"{prefix}.csv", f"{prefix}.json"]
        assert (tmp_path / "nested" / "deeper" / "run.json").exists()

    def test_unknown_format(self, report, tmp_path):
        """Only csv and json are supported."""
        with pytest.raises(ValueError, match="xml"):
            ReportWriter.write(report, str(tmp_path / "run"), ["xml"])

    def test_unwritable_destination(self, report, tmp_path, mocker):
        """OSError from the filesystem propagates."""
        mocker.patch(
            "dirac_lab.report.writer.open",
            side_effect=PermissionError("denied"),
            create=True,
        )
        with pytest.raises(OSError):
            ReportWriter.save_json(report, str(tmp_path / "run.json"))
