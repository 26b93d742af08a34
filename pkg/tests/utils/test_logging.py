"""Tests for console logging helpers."""

from rich.console import Console

from dirac_lab.utils import logging as lab_logging


def _capture(monkeypatch):
    console = Console(record=True, width=120, force_terminal=False)
    monkeypatch.setattr(lab_logging, "console", console)
    return console


def test_log_metric_format(monkeypatch):
    """Metrics print with six significant digits and an optional unit."""
    console = _capture(monkeypatch)
    lab_logging.log_metric("P(chi)", 0.012345678, unit="1/a")
    assert "P(chi): 0.0123457 1/a" in console.export_text()


def test_log_levels_prefix(monkeypatch):
    """Every level prints its marker."""
    console = _capture(monkeypatch)
    lab_logging.log_info("info")
    lab_logging.log_success("done")
    lab_logging.log_warning("careful")
    lab_logging.log_error("broken")
    text = console.export_text()
    for marker, message in [("ℹ", "info"), ("✓", "done"), ("⚠", "careful"), ("✗", "broken")]:
        assert f"{marker} {message}" in text


def test_print_table(monkeypatch):
    """Tables render headers and cells."""
    console = _capture(monkeypatch)
    lab_logging.print_table("Refinement", ("study", "order"), [("shift - P", "1.98")])
    text = console.export_text()
    assert "Refinement" in text
    assert "shift - P" in text
    assert "1.98" in text


def test_console_writes_to_stderr():
    """The shared console keeps stdout free."""
    assert lab_logging.get_console().stderr
