"""Shared fixtures for CLI tests."""

import pytest


@pytest.fixture
def small_config(tmp_path):
    """Write a fast run configuration and return ``(path, prefix)``."""

    def _write(extra: str = "") -> tuple[str, str]:
        prefix = tmp_path / "results" / "run"
        path = tmp_path / "run.yaml"
        path.write_text(
            f"""
lattice: {{n_sites: 8, spacing: 0.5, mass: 1.0}}
state: {{kind: wavepacket, width: 1.0, momentum: 0.25}}
chi: {{kind: sine, amplitude: 0.5}}
sweep: {{values: [0.0, 5.0, 10.0]}}
refinement: 3
output: {{prefix: "{prefix}"}}
verify: {{samples: 5, sg_samples: 5, oracle_sites: 2, oracle_trials: 2, t_final: 0.2}}
{extra}
"""
        )
        return str(path), str(prefix)

    return _write


@pytest.fixture(autouse=True)
def quiet_env(monkeypatch):
    """Keep host settings out of CLI runs."""
    for name in ("DIRAC_LAB_CONFIG", "DIRAC_LAB_SEED"):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.setenv("DIRAC_LAB_NO_BANNER", "1")
