"""Finite-dimensional phase formalism with an explicit angular velocity operator.

The library builds phase states on a uniform angle grid, the cyclic shift
operator and its diagonal dual, and the rate-of-change operator
R = (E^dag H E - H)/hbar, then verifies the defining identities and the
semiclassical limit for three systems (free rotor, rotor in a magnetic
field, truncated oscillator).
"""
from importlib import metadata

from .linalg import (
    DEFAULT_TOL,
    adjoint,
    expectation,
    is_hermitian,
    is_unitary,
    mat_mul,
    max_abs_entry,
    q_commutator,
)
from .operators import (
    DualityReport,
    angular_velocity_operator,
    duality_check,
    naive_phase_rate,
    phase_state,
    phase_state_matrix,
    phi_operator,
    q_lz_operator,
    shift_operator,
)
from .spaces import KINDS, OSCILLATOR, ROTOR, FinitePhaseSpace, make_space
from .systems import (
    FREE_ROTOR,
    MAGNETIC_ROTOR,
    NATURAL,
    OSCILLATOR_SYSTEM,
    SI_GAUSSIAN,
    SYSTEM_KINDS,
    ConvergenceReport,
    ConvergenceRow,
    ExpectationReport,
    ExpectationRow,
    SystemSpec,
    expectation_table,
    gaussian_electron_ring,
    hamiltonian,
    magnetic_hamiltonian,
    oscillator_hamiltonian,
    rotor_hamiltonian,
    semiclassical_convergence,
)

try:
    __version__ = metadata.version("angvel")
except metadata.PackageNotFoundError:  # running from a source tree
    __version__ = "0+unknown"

__all__ = [
    "DEFAULT_TOL",
    "DualityReport",
    "ConvergenceReport",
    "ConvergenceRow",
    "ExpectationReport",
    "ExpectationRow",
    "FinitePhaseSpace",
    "FREE_ROTOR",
    "KINDS",
    "MAGNETIC_ROTOR",
    "NATURAL",
    "OSCILLATOR",
    "OSCILLATOR_SYSTEM",
    "ROTOR",
    "SI_GAUSSIAN",
    "SYSTEM_KINDS",
    "SystemSpec",
    "adjoint",
    "angular_velocity_operator",
    "duality_check",
    "expectation",
    "expectation_table",
    "gaussian_electron_ring",
    "hamiltonian",
    "is_hermitian",
    "is_unitary",
    "magnetic_hamiltonian",
    "make_space",
    "mat_mul",
    "max_abs_entry",
    "naive_phase_rate",
    "oscillator_hamiltonian",
    "phase_state",
    "phase_state_matrix",
    "phi_operator",
    "q_commutator",
    "q_lz_operator",
    "rotor_hamiltonian",
    "semiclassical_convergence",
    "shift_operator",
]
