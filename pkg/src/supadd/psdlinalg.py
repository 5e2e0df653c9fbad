"""Dense real-symmetric linear algebra: eigendecomposition, PSD square
roots, Hadamard matrices, and positive-definiteness certification."""

from typing import NamedTuple

import numpy as np

from .errors import InvalidInput, NotPSD


class EigenDecomp(NamedTuple):
    values: np.ndarray  # ascending
    vectors: np.ndarray  # orthogonal, columns are eigenvectors


def _as_symmetric(m):
    m = np.asarray(m, dtype=np.float64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise InvalidInput(f"expected a square matrix, got shape {m.shape}")
    if not np.isfinite(m).all():
        raise InvalidInput("matrix has non-finite entries")
    if not np.array_equal(m, m.T):
        # tolerate round-off asymmetry but nothing structural
        if np.abs(m - m.T).max() > 1e-12 * max(1.0, np.abs(m).max()):
            raise InvalidInput("matrix is not symmetric")
        m = (m + m.T) / 2.0
    return m


def eig_sym(m) -> EigenDecomp:
    """Eigendecomposition of a real symmetric matrix, values ascending."""
    m = _as_symmetric(m)
    values, vectors = np.linalg.eigh(m)
    return EigenDecomp(values, vectors)


def sqrt_psd(m, clamp_tol: float = 1e-10) -> np.ndarray:
    """Symmetric PSD square root via the eigenbasis.

    Eigenvalues in [-clamp_tol, 0) are clamped to zero; anything below
    -clamp_tol raises NotPSD (the signature of linearly dependent states).
    """
    m = _as_symmetric(m)
    values, vectors = np.linalg.eigh(m)
    if values[0] < -clamp_tol:
        raise NotPSD(f"eigenvalue {values[0]:.3e} below -clamp_tol={-clamp_tol:.1e}")
    root = np.sqrt(np.clip(values, 0.0, None))
    s = (vectors * root) @ vectors.T
    return (s + s.T) / 2.0


def hadamard(order: int) -> np.ndarray:
    """Sign-matrix of the doubling construction H_{2k} = [[H,H],[H,-H]]."""
    if order < 1 or order & (order - 1) != 0:
        raise InvalidInput(f"order must be a power of two, got {order}")
    h = np.array([[1]], dtype=np.int64)
    while h.shape[0] < order:
        h = np.block([[h, h], [h, -h]])
    return h


def is_positive_definite(m, tol: float = 0.0) -> bool:
    """True iff the smallest eigenvalue exceeds tol."""
    m = _as_symmetric(m)
    values = np.linalg.eigvalsh(m)
    return bool(values[0] > tol)
