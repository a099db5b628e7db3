"""Dense symmetric eigensolver for excitation blocks.

Blocks are small (a handful up to a few hundred rows), so the full spectrum
is computed with LAPACK through ``numpy.linalg.eigh`` behind a contract that
validates the input and fixes a deterministic eigenvector sign convention.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ContractError

__all__ = ["EigenDecomposition", "eigh_symmetric", "lowest_eigenpair"]

_SYMMETRY_TOL = 1e-12


@dataclass(frozen=True)
class EigenDecomposition:
    """Full spectrum of a real symmetric matrix.

    ``values`` ascend; column i of ``vectors`` is the unit eigenvector of
    ``values[i]``, signed so its largest-magnitude component is positive.
    """

    values: np.ndarray
    vectors: np.ndarray


def _validated(matrix) -> np.ndarray:
    a = np.asarray(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ContractError(f"expected a square matrix, got shape {a.shape}")
    scale = max(1.0, float(np.max(np.abs(a))) if a.size else 0.0)
    if float(np.max(np.abs(a - a.T))) > _SYMMETRY_TOL * scale:
        raise ContractError("matrix is not symmetric within tolerance")
    return a


def _fix_signs(vectors: np.ndarray) -> np.ndarray:
    for i in range(vectors.shape[1]):
        col = vectors[:, i]
        lead = int(np.argmax(np.abs(col)))
        if col[lead] < 0.0:
            vectors[:, i] = -col
    return vectors


def eigh_symmetric(matrix) -> EigenDecomposition:
    """Eigendecomposition of a real symmetric matrix, values ascending."""
    a = _validated(matrix)
    values, vectors = np.linalg.eigh(a)
    return EigenDecomposition(values=values, vectors=_fix_signs(vectors))


def lowest_eigenpair(matrix) -> tuple[float, np.ndarray]:
    """Lowest eigenvalue and its unit eigenvector."""
    a = _validated(matrix)
    if a.shape == (1, 1):
        return float(a[0, 0]), np.ones(1)
    values, vectors = np.linalg.eigh(a)
    return float(values[0]), _fix_signs(vectors[:, :1])[:, 0]
