"""Brute-force Fock-space oracle for small lattices.

Fermionic modes are mapped to qubits by the Jordan-Wigner transformation,
``c_j = Z (x) ... (x) Z (x) sigma^- (x) 1 (x) ... (x) 1``, and every
observable is built as an explicit sparse operator on the ``2^(2N)``
dimensional Fock space. Nothing here uses the correlation-matrix shortcuts,
so agreement with :mod:`dirac_lab.gaussian` is an independent check.
"""

from functools import reduce

import numpy as np
import scipy.linalg
import scipy.sparse as sp

from ..gauge.models import GaugeFunction
from ..gaussian.models import CorrelationState
from ..lattice.models import ComplexMatrix, LatticeConfig
from .models import FockDimensionError

MAX_ORACLE_SITES = 4

_LOWER = sp.csr_matrix(np.array([[0.0, 1.0], [0.0, 0.0]], dtype=np.complex128))
_PARITY = sp.csr_matrix(np.diag([1.0, -1.0]).astype(np.complex128))
_IDENTITY = sp.identity(2, dtype=np.complex128, format="csr")


class FockSpace:
    """Jordan-Wigner representation of ``n_modes`` fermionic modes.

    Mode ``j`` is the ``j``-th tensor factor (most significant bit); the
    empty state is basis vector 0.
    """

    def __init__(self, n_modes: int) -> None:
        """Build the annihilation and creation operators of every mode."""
        self.n_modes = n_modes
        self.dim = 2**n_modes
        self.annihilators = [self._annihilator(j) for j in range(n_modes)]
        self.creators = [c.conj().T.tocsr() for c in self.annihilators]

    def _annihilator(self, mode: int) -> sp.csr_matrix:
        factors = [_PARITY] * mode + [_LOWER] + [_IDENTITY] * (self.n_modes - mode - 1)
        return reduce(lambda a, b: sp.kron(a, b, format="csr"), factors)

    def vacuum(self) -> np.ndarray:
        """The empty state ``|0...0>``."""
        vector = np.zeros(self.dim, dtype=np.complex128)
        vector[0] = 1.0
        return vector

    def occupations(self) -> np.ndarray:
        """Occupation numbers, shape ``(dim, n_modes)``."""
        basis = np.arange(self.dim)[:, None]
        shifts = self.n_modes - 1 - np.arange(self.n_modes)[None, :]
        return (basis >> shifts) & 1

    def quadratic(self, kernel: ComplexMatrix) -> sp.csr_matrix:
        """``sum_ij M_ij c_i^dag c_j`` for a one-body kernel ``M``."""
        operator = sp.csr_matrix((self.dim, self.dim), dtype=np.complex128)
        rows, cols = np.nonzero(kernel)
        for i, j in zip(rows, cols):
            operator = operator + kernel[i, j] * (self.creators[i] @ self.annihilators[j])
        return operator.tocsr()

    def slater(self, orbitals: ComplexMatrix) -> np.ndarray:
        """``prod_k b_k^dag |0>`` with ``b_k^dag = sum_i orbitals[i, k] c_i^dag``."""
        vector = self.vacuum()
        for k in range(orbitals.shape[1]):
            creator = sum(
                (orbitals[i, k] * self.creators[i] for i in range(self.n_modes)),
                start=sp.csr_matrix((self.dim, self.dim), dtype=np.complex128),
            )
            vector = creator @ vector
        return vector

    def slater_from_correlation(self, state: CorrelationState) -> np.ndarray:
        """Fock vector of a pure Gaussian state (occupied natural orbitals)."""
        occ, vectors = np.linalg.eigh(state.corr)
        return self.slater(vectors[:, occ > 0.5])

    def correlation(self, vector: np.ndarray) -> ComplexMatrix:
        """``C_ij = <psi| c_j^dag c_i |psi>`` read off a Fock vector."""
        corr = np.empty((self.n_modes, self.n_modes), dtype=np.complex128)
        for i in range(self.n_modes):
            ci = self.annihilators[i] @ vector
            for j in range(self.n_modes):
                corr[i, j] = np.vdot(self.annihilators[j] @ vector, ci)
        return corr

    def gauge_unitary(self, chi: GaugeFunction, charge: int = 1) -> sp.csr_matrix:
        """``exp(i q sum_i chi_i n_i)``, diagonal in the occupation basis."""
        site_phase = np.repeat(charge * chi.chi, 2)
        phases = np.exp(1j * self.occupations() @ site_phase)
        return sp.diags(phases, format="csr")


def fock_space_for(config: LatticeConfig) -> FockSpace:
    """Fock space of the lattice's ``2N`` modes.

    Raises
    ------
    FockDimensionError
        If ``N > 4`` (Fock dimension above 256).

    """
    if config.n_sites > MAX_ORACLE_SITES:
        raise FockDimensionError(
            f"Fock oracle supports at most {MAX_ORACLE_SITES} sites "
            f"(2^{2 * MAX_ORACLE_SITES} states), got {config.n_sites}"
        )
    return FockSpace(config.dim)


def expectation_value(operator: sp.spmatrix, vector: np.ndarray) -> float:
    """``<psi|O|psi>`` for a Hermitian operator."""
    return float(np.real(np.vdot(vector, operator @ vector)))


def ground_state(operator: sp.spmatrix) -> tuple[float, np.ndarray]:
    """Lowest eigenpair by dense diagonalization."""
    energies, vectors = np.linalg.eigh(operator.toarray())
    return float(energies[0]), vectors[:, 0]


def evolve_vector(operator: sp.spmatrix, vector: np.ndarray, t: float) -> np.ndarray:
    """``exp(-i H t) |psi>`` with a dense matrix exponential."""
    return scipy.linalg.expm(-1j * t * operator.toarray()) @ vector
