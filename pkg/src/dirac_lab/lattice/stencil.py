"""Spinor matrices and the Wilson-Dirac stencil blocks.

Basis index is ``2 * site + spinor`` with ``alpha = sigma_x`` and
``beta = sigma_z``.
"""

import numpy as np

from .models import ComplexMatrix, LatticeConfig

SIGMA_X: ComplexMatrix = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SIGMA_Y: ComplexMatrix = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SIGMA_Z: ComplexMatrix = np.array([[1, 0], [0, -1]], dtype=np.complex128)
IDENTITY_2: ComplexMatrix = np.eye(2, dtype=np.complex128)

ALPHA = SIGMA_X
BETA = SIGMA_Z


def hopping_block(config: LatticeConfig) -> ComplexMatrix:
    """Forward hopping block ``h[i, i+1] = (-i alpha - r beta) / (2a)``."""
    a, r = config.spacing, config.wilson_r
    return (-1j * ALPHA - r * BETA) / (2.0 * a)


def onsite_block(config: LatticeConfig) -> ComplexMatrix:
    """Site-diagonal block ``beta (m + r/a)``."""
    return BETA * (config.mass + config.wilson_r / config.spacing)


def block(index: int) -> slice:
    """Slice of the two spinor components of ``index``."""
    return slice(2 * index, 2 * index + 2)
