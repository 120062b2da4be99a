"""Dense complex linear algebra with tolerance-based structural checks.

Operators are plain numpy arrays of dtype complex128, acting on column
vectors: ``A[i, j]`` couples input component ``j`` to output component ``i``.
How quantum numbers map to indices is fixed in :mod:`angvel.spaces`.
"""
from __future__ import annotations

import numpy as np

DEFAULT_TOL = 1e-12


def _as_matrix(a) -> np.ndarray:
    a = np.asarray(a, dtype=np.complex128)
    if a.ndim != 2:
        raise ValueError(f"expected a matrix, got array of shape {a.shape}")
    return a


def _as_square(a) -> np.ndarray:
    a = _as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    return a


def _check_tol(tol: float) -> float:
    if tol <= 0:
        raise ValueError(f"tolerance must be > 0, got {tol}")
    return tol


def mat_mul(a, b) -> np.ndarray:
    """Matrix product a @ b with explicit shape checking."""
    a, b = _as_matrix(a), _as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"dimension mismatch in product: {a.shape} x {b.shape}")
    return a @ b


def adjoint(a) -> np.ndarray:
    """Conjugate transpose."""
    return _as_matrix(a).conj().T


def expectation(a, psi) -> complex:
    """<psi|A|psi> for a square matrix and a state vector of matching length."""
    a = _as_square(a)
    psi = np.asarray(psi, dtype=np.complex128)
    if psi.ndim != 1:
        raise ValueError(f"expected a state vector, got array of shape {psi.shape}")
    if a.shape[0] != psi.shape[0]:
        raise ValueError(f"dimension mismatch: matrix {a.shape}, state length {psi.shape[0]}")
    return complex(np.vdot(psi, a @ psi))


def max_abs_entry(a) -> float:
    """Largest entry magnitude; 0.0 for an empty array."""
    a = np.asarray(a, dtype=np.complex128)
    return float(np.max(np.abs(a))) if a.size else 0.0


def is_hermitian(a, tol: float = DEFAULT_TOL) -> bool:
    """True when max-entry |A - A^dag| <= tol."""
    a = _as_square(a)
    _check_tol(tol)
    return max_abs_entry(a - a.conj().T) <= tol


def is_unitary(a, tol: float = DEFAULT_TOL) -> bool:
    """True when max-entry |A^dag A - I| <= tol."""
    a = _as_square(a)
    _check_tol(tol)
    eye = np.eye(a.shape[0], dtype=np.complex128)
    return max_abs_entry(a.conj().T @ a - eye) <= tol


def q_commutator(a, b, q: complex) -> np.ndarray:
    """Deformed commutator A B - q B A for same-shape square matrices."""
    a, b = _as_square(a), _as_square(b)
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    return a @ b - q * (b @ a)
