"""Data models for the 1+1D Wilson-Dirac lattice."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any

import numpy as np
from numpy.typing import NDArray

ComplexMatrix = NDArray[np.complex128]
RealVector = NDArray[np.float64]

HERMITIAN_RTOL = 1e-13
CHARGE = 1


class LatticeError(ValueError):
    """Invalid lattice configuration, index or field shape."""


class DimensionMismatchError(ValueError):
    """Kernel, state and vacuum dimensions disagree."""


class Boundary(str, Enum):
    """Spatial boundary condition of the chain."""

    PERIODIC = "periodic"
    OPEN = "open"


class CouplingScheme(str, Enum):
    """How a static potential enters the single-particle kernel."""

    PEIERLS = "peierls"
    LINEAR = "linear"


@dataclass(frozen=True)
class LatticeConfig:
    """Geometry and couplings of the lattice Dirac field.

    Units are natural (hbar = c = 1): ``spacing`` is a length, ``mass`` an
    inverse length. The charge is fixed to ``+1``.

    Parameters
    ----------
    n_sites : int
        Number of sites ``N`` (at least 2).
    spacing : float
        Lattice spacing ``a > 0``.
    mass : float
        Fermion mass ``m >= 0``.
    wilson_r : float, optional
        Wilson parameter in ``(0, 1]`` (default=1.0).
    boundary : Boundary, optional
        Boundary condition (default=periodic).

    """

    n_sites: int
    spacing: float
    mass: float
    wilson_r: float = 1.0
    boundary: Boundary = Boundary.PERIODIC
    charge: int = field(default=CHARGE, init=False)

    def __post_init__(self) -> None:
        """Validate the configuration."""
        if self.n_sites < 2:
            raise LatticeError(f"n_sites must be >= 2, got {self.n_sites}")
        if not np.isfinite(self.spacing) or self.spacing <= 0:
            raise LatticeError(f"spacing must be > 0, got {self.spacing}")
        if not np.isfinite(self.mass) or self.mass < 0:
            raise LatticeError(f"mass must be >= 0, got {self.mass}")
        if not 0.0 < self.wilson_r <= 1.0:
            raise LatticeError(f"wilson_r must lie in (0, 1], got {self.wilson_r}")
        # Accept plain strings from config files.
        object.__setattr__(self, "boundary", Boundary(self.boundary))

    @property
    def dim(self) -> int:
        """Single-particle dimension ``2N`` (site x spinor)."""
        return 2 * self.n_sites

    @property
    def length(self) -> float:
        """Physical length ``L = N a``."""
        return self.n_sites * self.spacing

    @property
    def n_links(self) -> int:
        """Number of nearest-neighbour links."""
        if self.boundary is Boundary.PERIODIC:
            return self.n_sites
        return self.n_sites - 1

    @property
    def positions(self) -> RealVector:
        """Site coordinates ``x_i = i a``."""
        return np.arange(self.n_sites, dtype=np.float64) * self.spacing

    def link_ends(self, link: int) -> tuple[int, int]:
        """Return the (left, right) sites joined by ``link``."""
        if not 0 <= link < self.n_links:
            raise LatticeError(f"link {link} out of range [0, {self.n_links})")
        return link, (link + 1) % self.n_sites

    def with_spacing(self, spacing: float) -> "LatticeConfig":
        """Return the config at a new spacing with the physical length fixed.

        Raises
        ------
        LatticeError
            If ``L / spacing`` is not (close to) an integer.

        """
        ratio = self.length / spacing
        n_sites = round(ratio)
        if abs(ratio - n_sites) > 1e-9 * max(ratio, 1.0):
            raise LatticeError(
                f"spacing {spacing} does not divide the length {self.length}"
            )
        return LatticeConfig(
            n_sites=n_sites,
            spacing=spacing,
            mass=self.mass,
            wilson_r=self.wilson_r,
            boundary=self.boundary,
        )

    def to_dict(self) -> dict[str, Any]:
        """Convert to dictionary for JSON serialization."""
        return {
            "n_sites": self.n_sites,
            "spacing": self.spacing,
            "mass": self.mass,
            "wilson_r": self.wilson_r,
            "boundary": self.boundary.value,
            "charge": self.charge,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "LatticeConfig":
        """Create from dictionary."""
        return cls(
            n_sites=int(data["n_sites"]),
            spacing=float(data["spacing"]),
            mass=float(data["mass"]),
            wilson_r=float(data.get("wilson_r", 1.0)),
            boundary=Boundary(data.get("boundary", "periodic")),
        )


def _frozen(array: NDArray[Any]) -> NDArray[Any]:
    array = np.array(array, copy=True)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class SingleParticleOperator:
    """Hermitian kernel ``M`` of a bilinear observable ``sum psi^dag M psi``.

    Parameters
    ----------
    matrix : ComplexMatrix
        The ``2N x 2N`` kernel, indexed by ``2 * site + spinor``.
    label : str
        Free-text tag used in reports.

    """

    matrix: ComplexMatrix
    label: str = ""

    def __post_init__(self) -> None:
        """Freeze the kernel and check it is square, even-sized and Hermitian."""
        matrix = np.asarray(self.matrix, dtype=np.complex128)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise DimensionMismatchError(f"kernel must be square, got {matrix.shape}")
        if matrix.shape[0] % 2:
            raise DimensionMismatchError(
                f"kernel dimension must be 2N, got {matrix.shape[0]}"
            )
        scale = max(float(np.linalg.norm(matrix)), 1.0)
        if np.linalg.norm(matrix - matrix.conj().T) > HERMITIAN_RTOL * scale:
            raise LatticeError(f"kernel '{self.label}' is not Hermitian")
        object.__setattr__(self, "matrix", _frozen(matrix))

    @property
    def dim(self) -> int:
        """Single-particle dimension."""
        return int(self.matrix.shape[0])

    @property
    def n_sites(self) -> int:
        """Number of lattice sites."""
        return self.dim // 2

    def spectrum(self) -> RealVector:
        """Eigenvalues in ascending order."""
        return np.linalg.eigvalsh(self.matrix)

    def to_dict(self) -> dict[str, Any]:
        """Serialize as row-major ``[re, im]`` pairs."""
        flat = self.matrix.reshape(-1)
        return {
            "label": self.label,
            "dim": self.dim,
            "entries": [[float(z.real), float(z.imag)] for z in flat],
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "SingleParticleOperator":
        """Rebuild from :meth:`to_dict` output."""
        dim = int(data["dim"])
        pairs = np.asarray(data["entries"], dtype=np.float64)
        matrix = (pairs[:, 0] + 1j * pairs[:, 1]).reshape(dim, dim)
        return cls(matrix=matrix, label=data.get("label", ""))


@dataclass(frozen=True, eq=False)
class LinkField:
    """Spatial vector potential ``A`` sampled on links (inverse length).

    ``values[l]`` lives on the link joining sites ``l`` and ``l + 1``.
    """

    values: RealVector
    label: str = ""

    def __post_init__(self) -> None:
        """Freeze the samples and reject non-finite values."""
        values = np.asarray(self.values, dtype=np.float64)
        if values.ndim != 1 or not np.all(np.isfinite(values)):
            raise LatticeError("link field must be a finite 1D array")
        object.__setattr__(self, "values", _frozen(values))

    @classmethod
    def zeros(cls, config: LatticeConfig) -> "LinkField":
        """Zero vector potential on every link of ``config``."""
        return cls(values=np.zeros(config.n_links), label="zero")

    def __len__(self) -> int:
        """Return the number of links."""
        return int(self.values.shape[0])


@dataclass(frozen=True, eq=False)
class ScalarPotential:
    """Scalar potential ``A0`` sampled on sites."""

    values: RealVector
    label: str = ""

    def __post_init__(self) -> None:
        """Freeze the samples and reject non-finite values."""
        values = np.asarray(self.values, dtype=np.float64)
        if values.ndim != 1 or not np.all(np.isfinite(values)):
            raise LatticeError("scalar potential must be a finite 1D array")
        object.__setattr__(self, "values", _frozen(values))

    @classmethod
    def zeros(cls, config: LatticeConfig) -> "ScalarPotential":
        """Zero scalar potential on every site of ``config``."""
        return cls(values=np.zeros(config.n_sites), label="zero")

    @classmethod
    def constant(cls, config: LatticeConfig, value: float) -> "ScalarPotential":
        """Uniform scalar potential."""
        return cls(values=np.full(config.n_sites, float(value)), label="constant")

    def __len__(self) -> int:
        """Return the number of sites."""
        return int(self.values.shape[0])
