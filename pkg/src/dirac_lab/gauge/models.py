"""Gauge functions and their diagonal phase unitaries."""

from dataclasses import dataclass
from typing import Any

import numpy as np

from ..lattice.models import (
    Boundary,
    ComplexMatrix,
    LatticeConfig,
    RealVector,
)

UNIT_MODULUS_TOL = 1e-12


class GaugeError(ValueError):
    """Invalid gauge function or gauge function unsuitable for a probe."""


@dataclass(frozen=True, eq=False)
class GaugeFunction:
    """Static real gauge function ``chi`` sampled on sites.

    ``chi`` is dimensionless (hbar = c = 1, q = 1). On a periodic chain the
    samples are single-valued by construction.

    Parameters
    ----------
    chi : RealVector
        One value per site.
    label : str
        Free-text tag (the generator name for config-built functions).

    """

    chi: RealVector
    label: str = ""

    def __post_init__(self) -> None:
        """Freeze the samples and reject empty or non-finite input."""
        chi = np.array(self.chi, dtype=np.float64, copy=True)
        if chi.ndim != 1 or chi.size == 0:
            raise GaugeError("gauge function must be a non-empty 1D array")
        if not np.all(np.isfinite(chi)):
            raise GaugeError("gauge function has non-finite samples")
        chi.setflags(write=False)
        object.__setattr__(self, "chi", chi)

    def __len__(self) -> int:
        """Return the number of sites."""
        return int(self.chi.shape[0])

    def is_constant(self, tol: float = 0.0) -> bool:
        """Whether all samples agree to within ``tol``."""
        return bool(np.ptp(self.chi) <= tol)

    def scaled(self, factor: float) -> "GaugeFunction":
        """``factor * chi``."""
        return GaugeFunction(chi=factor * self.chi, label=f"{factor:g}*{self.label}")

    def __add__(self, other: "GaugeFunction") -> "GaugeFunction":
        """Pointwise sum of two gauge functions on the same lattice."""
        if len(self) != len(other):
            raise GaugeError(
                f"cannot add gauge functions of length {len(self)} and {len(other)}"
            )
        return GaugeFunction(chi=self.chi + other.chi, label=f"{self.label}+{other.label}")

    def __neg__(self) -> "GaugeFunction":
        """Pointwise negation."""
        return GaugeFunction(chi=-self.chi, label=f"-{self.label}")

    @classmethod
    def from_samples(cls, samples: list[float], label: str = "samples") -> "GaugeFunction":
        """Explicit sample list."""
        return cls(chi=np.asarray(samples, dtype=np.float64), label=label)

    @classmethod
    def constant(cls, config: LatticeConfig, value: float) -> "GaugeFunction":
        """Global (constant) gauge change."""
        return cls(chi=np.full(config.n_sites, float(value)), label="constant")

    @classmethod
    def sine(
        cls, config: LatticeConfig, amplitude: float, wavelength: float | None = None
    ) -> "GaugeFunction":
        """``amplitude * sin(2 pi x / wavelength)``; the wavelength defaults to ``L``."""
        wavelength = config.length if wavelength is None else wavelength
        if wavelength <= 0:
            raise GaugeError(f"wavelength must be > 0, got {wavelength}")
        chi = amplitude * np.sin(2.0 * np.pi * config.positions / wavelength)
        return cls(chi=chi, label="sine")

    @classmethod
    def bump(
        cls, config: LatticeConfig, center: float, width: float, amplitude: float
    ) -> "GaugeFunction":
        """Gaussian bump ``amplitude * exp(-(x - center)^2 / (2 width^2))``."""
        if width <= 0:
            raise GaugeError(f"bump width must be > 0, got {width}")
        dx = config.positions - center
        if config.boundary is Boundary.PERIODIC:
            dx = (dx + 0.5 * config.length) % config.length - 0.5 * config.length
        chi = amplitude * np.exp(-(dx**2) / (2.0 * width**2))
        return cls(chi=chi, label="bump")

    @classmethod
    def random(
        cls, config: LatticeConfig, rng: np.random.Generator, scale: float = 1.0
    ) -> "GaugeFunction":
        """Independent uniform samples in ``[-scale, scale)``."""
        chi = rng.uniform(-scale, scale, size=config.n_sites)
        return cls(chi=chi, label="random")

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return {"label": self.label, "chi": [float(v) for v in self.chi]}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "GaugeFunction":
        """Create from dictionary."""
        return cls.from_samples(data["chi"], label=data.get("label", "samples"))


@dataclass(frozen=True, eq=False)
class GaugeUnitary:
    """Diagonal phase unitary ``G = diag(exp(i q chi_site))`` over site x spinor.

    Both spinor components at a site carry the same phase.
    """

    phases: np.ndarray

    def __post_init__(self) -> None:
        """Freeze the phases and check unit modulus and spinor pairing."""
        phases = np.array(self.phases, dtype=np.complex128, copy=True)
        if phases.ndim != 1 or phases.size % 2:
            raise GaugeError("gauge unitary needs one phase per (site, spinor)")
        if np.max(np.abs(np.abs(phases) - 1.0)) > UNIT_MODULUS_TOL:
            raise GaugeError("gauge phases must have unit modulus")
        if np.max(np.abs(phases[0::2] - phases[1::2])) > UNIT_MODULUS_TOL:
            raise GaugeError("spinor components of a site must share one phase")
        phases.setflags(write=False)
        object.__setattr__(self, "phases", phases)

    @property
    def dim(self) -> int:
        """Single-particle dimension."""
        return int(self.phases.shape[0])

    def matrix(self) -> ComplexMatrix:
        """Dense diagonal matrix."""
        return np.diag(self.phases)

    def compose(self, other: "GaugeUnitary") -> "GaugeUnitary":
        """``self @ other``; ``G_chi1 G_chi2 = G_(chi1 + chi2)``."""
        if other.dim != self.dim:
            raise GaugeError(f"cannot compose unitaries of size {self.dim} and {other.dim}")
        return GaugeUnitary(phases=self.phases * other.phases)

    def inverse(self) -> "GaugeUnitary":
        """``G^dag``, equal to ``G_(-chi)``."""
        return GaugeUnitary(phases=self.phases.conj())

    def conjugate(self, matrix: ComplexMatrix) -> ComplexMatrix:
        """``G M G^dag`` for a dense single-particle matrix."""
        return matrix * np.outer(self.phases, self.phases.conj())
