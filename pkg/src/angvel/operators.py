"""Explicit matrices of the finite phase formalism.

All operators are built directly in the number / angular-momentum basis.
The shift operator is an exact 0/1 permutation matrix and the dual operator
is exactly diagonal, so identities between them incur no rounding beyond the
entries themselves; the spectral route through the hermitian angle operator
is a cross-check, not the constructor.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from .linalg import adjoint, max_abs_entry, q_commutator
from .spaces import FinitePhaseSpace


def phase_state(space: FinitePhaseSpace, n: int) -> np.ndarray:
    """Angle state |theta_n>: amplitude exp(-i*mu*theta_n)/sqrt(dim) on each |mu>."""
    if not 0 <= n < space.dim:
        raise ValueError(f"phase-state index {n} outside [0, {space.dim})")
    return np.exp(-1j * space.quantum_numbers * space.theta(n)) / np.sqrt(space.dim)


def phase_state_matrix(space: FinitePhaseSpace) -> np.ndarray:
    """Unitary dim x dim matrix whose column n is the phase state |theta_n>."""
    return np.exp(-1j * np.outer(space.quantum_numbers, space.thetas)) / np.sqrt(space.dim)


def shift_operator(space: FinitePhaseSpace) -> np.ndarray:
    """Unitary raising shift |mu> -> |mu+1>; the top state wraps to the bottom."""
    d = space.dim
    out = np.zeros((d, d), dtype=np.complex128)
    cols = np.arange(d)
    out[(cols + 1) % d, cols] = 1.0
    return out


def q_lz_operator(space: FinitePhaseSpace) -> np.ndarray:
    """Diagonal dual operator q^mu; steps the angle grid by one position."""
    return np.diag(np.exp(-2j * np.pi * space.quantum_numbers / space.dim))


def phi_operator(space: FinitePhaseSpace) -> np.ndarray:
    """Hermitian angle operator sum_n theta_n |theta_n><theta_n|.

    Needed only for the naive-rate diagnostic; everything else uses the shift
    operator directly.
    """
    basis = phase_state_matrix(space)
    return (basis * space.thetas) @ adjoint(basis)


def angular_velocity_operator(hamiltonian, shift, hbar: float = 1.0) -> np.ndarray:
    """Rate-of-change operator (shift^dag H shift - H)/hbar; hermitian when H is."""
    h = np.asarray(hamiltonian, dtype=np.complex128)
    e = np.asarray(shift, dtype=np.complex128)
    if h.ndim != 2 or h.shape[0] != h.shape[1]:
        raise ValueError(f"expected a square Hamiltonian, got shape {h.shape}")
    if e.shape != h.shape:
        raise ValueError(f"shape mismatch: Hamiltonian {h.shape}, shift {e.shape}")
    if hbar <= 0:
        raise ValueError(f"hbar must be > 0, got {hbar}")
    return (adjoint(e) @ h @ e - h) / hbar


def naive_phase_rate(angle_op, hamiltonian, hbar: float = 1.0) -> np.ndarray:
    """Heisenberg rate (1/i*hbar)[angle_op, H].

    On any eigenstate of H this has exactly zero expectation — the standard
    dead end the angular velocity operator is built to avoid.
    """
    phi = np.asarray(angle_op, dtype=np.complex128)
    h = np.asarray(hamiltonian, dtype=np.complex128)
    if phi.shape != h.shape or phi.ndim != 2 or phi.shape[0] != phi.shape[1]:
        raise ValueError(f"shape mismatch: angle operator {phi.shape}, Hamiltonian {h.shape}")
    if hbar <= 0:
        raise ValueError(f"hbar must be > 0, got {hbar}")
    return (phi @ h - h @ phi) / (1j * hbar)


@dataclass(frozen=True)
class DualityReport:
    """Max deviations of the dual shift actions plus the q-commutator norm.

    eigen_shift_*: columns of E against |mu+1> targets (wrap = top column).
    phase_shift_*: q^Lz|theta_n> against |theta_{n+1}> (wrap = last grid point).
    q_commutator_norm: max-entry |q^Lz E - q E q^Lz|.
    """

    eigen_shift_interior: float
    eigen_shift_wrap: float
    phase_shift_interior: float
    phase_shift_wrap: float
    q_commutator_norm: float

    @property
    def max_deviation(self) -> float:
        return max(asdict(self).values())

    def as_dict(self) -> dict:
        return asdict(self)


def duality_check(space: FinitePhaseSpace) -> DualityReport:
    """Verify the shift action on both bases and the q-commutation identity."""
    d = space.dim
    shift = shift_operator(space)
    dual = q_lz_operator(space)

    eye = np.eye(d, dtype=np.complex128)
    eigen_cols = np.linalg.norm(shift - np.roll(eye, 1, axis=0), axis=0)

    basis = phase_state_matrix(space)
    phase_cols = np.linalg.norm(dual @ basis - np.roll(basis, -1, axis=1), axis=0)

    return DualityReport(
        eigen_shift_interior=float(eigen_cols[:-1].max()) if d > 1 else 0.0,
        eigen_shift_wrap=float(eigen_cols[-1]),
        phase_shift_interior=float(phase_cols[:-1].max()) if d > 1 else 0.0,
        phase_shift_wrap=float(phase_cols[-1]),
        q_commutator_norm=max_abs_entry(q_commutator(dual, shift, space.q)),
    )
