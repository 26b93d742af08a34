"""Data models for Gaussian (quasi-free) fermionic states."""

from dataclasses import dataclass
from typing import Any

import numpy as np

from ..lattice.models import ComplexMatrix, DimensionMismatchError, RealVector

HERMITIAN_TOL = 1e-10
PAULI_TOL = 1e-10
PURITY_TOL = 1e-10


class ZeroModeError(ValueError):
    """The single-particle Hamiltonian has a (near-)zero eigenvalue."""


class ModeError(ValueError):
    """A mode vector passed to ``excite`` violates its preconditions."""


def _as_hermitian(matrix: ComplexMatrix, what: str) -> ComplexMatrix:
    matrix = np.asarray(matrix, dtype=np.complex128)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1] or matrix.shape[0] % 2:
        raise DimensionMismatchError(f"{what} must be a square 2N x 2N matrix")
    scale = max(float(np.linalg.norm(matrix)), 1.0)
    if np.linalg.norm(matrix - matrix.conj().T) > HERMITIAN_TOL * scale:
        raise ValueError(f"{what} is not Hermitian")
    matrix = 0.5 * (matrix + matrix.conj().T)
    matrix.setflags(write=False)
    return matrix


@dataclass(frozen=True, eq=False)
class CorrelationState:
    """One-body correlation matrix ``C_ij = <psi_j^dag psi_i>`` of a Gaussian state.

    The density operator is normalized by construction, so ``C`` alone
    determines every quadratic expectation value. Only Hermiticity is
    enforced on construction; the Pauli bound and purity are reported by
    :meth:`invariant_violations` so that corrupted states can be diagnosed
    rather than rejected.

    Parameters
    ----------
    corr : ComplexMatrix
        The ``2N x 2N`` correlation matrix.
    label : str
        Free-text tag.

    """

    corr: ComplexMatrix
    label: str = ""

    def __post_init__(self) -> None:
        """Freeze and symmetrize the correlation matrix."""
        object.__setattr__(self, "corr", _as_hermitian(self.corr, "correlation matrix"))

    @property
    def dim(self) -> int:
        """Single-particle dimension."""
        return int(self.corr.shape[0])

    def occupations(self) -> RealVector:
        """Eigenvalues of ``C`` (natural-orbital occupations), ascending."""
        return np.linalg.eigvalsh(self.corr)

    def purity_defect(self) -> float:
        """Largest entry of ``|C^2 - C|``; zero for pure (Slater) states."""
        return float(np.max(np.abs(self.corr @ self.corr - self.corr)))

    def particle_number(self) -> float:
        """``Tr C``."""
        return float(np.real(np.trace(self.corr)))

    def invariant_violations(self, require_pure: bool = False) -> list[str]:
        """List the state invariants that do not hold (empty when valid)."""
        problems = []
        occ = self.occupations()
        if occ[0] < -PAULI_TOL or occ[-1] > 1.0 + PAULI_TOL:
            problems.append(
                f"occupations outside [0, 1]: min={occ[0]:.3e}, max={occ[-1]:.3e}"
            )
        if require_pure and self.purity_defect() > PURITY_TOL:
            problems.append(f"not pure: |C^2 - C| = {self.purity_defect():.3e}")
        return problems

    def to_dict(self) -> dict[str, Any]:
        """Serialize for checkpointing (row-major ``[re, im]`` pairs)."""
        return {
            "label": self.label,
            "dim": self.dim,
            "entries": [[float(z.real), float(z.imag)] for z in self.corr.reshape(-1)],
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "CorrelationState":
        """Rebuild a state from :meth:`to_dict` output."""
        dim = int(data["dim"])
        pairs = np.asarray(data["entries"], dtype=np.float64)
        corr = (pairs[:, 0] + 1j * pairs[:, 1]).reshape(dim, dim)
        return cls(corr=corr, label=data.get("label", ""))


@dataclass(frozen=True, eq=False)
class VacuumReference:
    """Filled negative-energy sea used as the normal-ordering reference.

    Parameters
    ----------
    projector : ComplexMatrix
        Spectral projector onto the occupied modes (``P_-`` for the free
        vacuum, ``G P_- G^dag`` for a gauge-transformed observer).
    vacuum_energy_raw : float
        ``Tr(h P)`` of the Hamiltonian the sea was built from.
    label : str
        Free-text tag.

    """

    projector: ComplexMatrix
    vacuum_energy_raw: float
    label: str = "vacuum"

    def __post_init__(self) -> None:
        """Freeze and symmetrize the projector."""
        object.__setattr__(
            self, "projector", _as_hermitian(self.projector, "vacuum projector")
        )

    @property
    def dim(self) -> int:
        """Single-particle dimension."""
        return int(self.projector.shape[0])

    @property
    def rank(self) -> int:
        """Number of filled modes."""
        return round(float(np.real(np.trace(self.projector))))

    def as_state(self) -> CorrelationState:
        """The vacuum itself as a correlation state."""
        return CorrelationState(corr=self.projector, label=self.label)
