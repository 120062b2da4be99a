"""Definition-level reference constructions for cross-checking.

Everything here is deliberately naive: explicit per-entry amplitude sums,
triple-loop matrix products, plain Python complex numbers. The module gives
an independent second route to every operator built in
:mod:`angvel.operators` / :mod:`angvel.systems`, and tests compare the two
paths entry by entry at small dimension. Do not optimize this module and do
not import numpy (or anything from the production modules) here.
"""
from __future__ import annotations

import cmath
import math

ROTOR = "rotor"
OSCILLATOR = "oscillator"

Matrix = list  # list[list[complex]]
Vector = list  # list[complex]


# ---------------------------------------------------------------------------
# space bookkeeping


def dimension(kind: str, l_or_s: int) -> int:
    if l_or_s < 0:
        raise ValueError(f"order must be >= 0, got {l_or_s}")
    if kind == ROTOR:
        return 2 * l_or_s + 1
    if kind == OSCILLATOR:
        return l_or_s + 1
    raise ValueError(f"unknown kind {kind!r}")


def quantum_numbers(kind: str, l_or_s: int) -> list:
    if kind == ROTOR:
        return list(range(-l_or_s, l_or_s + 1))
    dimension(kind, l_or_s)  # validates
    return list(range(0, l_or_s + 1))


def index_of(kind: str, l_or_s: int, qn: int) -> int:
    numbers = quantum_numbers(kind, l_or_s)
    if qn not in numbers:
        raise ValueError(f"quantum number {qn} outside {numbers[0]}..{numbers[-1]}")
    return numbers.index(qn)


def theta(kind: str, l_or_s: int, n: int, theta0: float = 0.0) -> float:
    d = dimension(kind, l_or_s)
    if not 0 <= n < d:
        raise ValueError(f"grid index {n} outside [0, {d})")
    return theta0 + (2.0 * math.pi * n) / d


def deformation_parameter(kind: str, l_or_s: int) -> complex:
    return cmath.exp(-2j * math.pi / dimension(kind, l_or_s))


# ---------------------------------------------------------------------------
# naive matrix algebra


def zeros(rows: int, cols: int) -> Matrix:
    return [[0j for _ in range(cols)] for _ in range(rows)]


def identity(d: int) -> Matrix:
    out = zeros(d, d)
    for i in range(d):
        out[i][i] = 1 + 0j
    return out


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if len(a[0]) != len(b):
        raise ValueError("dimension mismatch in product")
    out = zeros(len(a), len(b[0]))
    for i in range(len(a)):
        for j in range(len(b[0])):
            acc = 0j
            for k in range(len(b)):
                acc += a[i][k] * b[k][j]
            out[i][j] = acc
    return out


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(z: complex, a: Matrix) -> Matrix:
    return [[z * x for x in row] for row in a]


def adjoint(a: Matrix) -> Matrix:
    rows, cols = len(a), len(a[0])
    return [[a[i][j].conjugate() for i in range(rows)] for j in range(cols)]


def max_abs(a: Matrix) -> float:
    return max((abs(x) for row in a for x in row), default=0.0)


def basis_state(d: int, index: int) -> Vector:
    vec = [0j] * d
    vec[index] = 1 + 0j
    return vec


def expectation(a: Matrix, psi: Vector) -> complex:
    acc = 0j
    for i in range(len(psi)):
        for j in range(len(psi)):
            acc += psi[i].conjugate() * a[i][j] * psi[j]
    return acc


def _int_power(z: complex, n: int) -> complex:
    if n < 0:
        return _int_power(1 / z, -n)
    acc = 1 + 0j
    for _ in range(n):
        acc *= z
    return acc


# ---------------------------------------------------------------------------
# the formalism, straight from the definitions


def phase_state(kind: str, l_or_s: int, n: int, theta0: float = 0.0) -> Vector:
    d = dimension(kind, l_or_s)
    angle = theta(kind, l_or_s, n, theta0)
    norm = 1.0 / math.sqrt(d)
    return [norm * cmath.exp(-1j * mu * angle) for mu in quantum_numbers(kind, l_or_s)]


def shift_matrix(kind: str, l_or_s: int) -> Matrix:
    """Raising shift on the eigenbasis; the top state wraps to the bottom."""
    numbers = quantum_numbers(kind, l_or_s)
    out = zeros(len(numbers), len(numbers))
    for mu in numbers:
        target = mu + 1 if mu < numbers[-1] else numbers[0]
        out[index_of(kind, l_or_s, target)][index_of(kind, l_or_s, mu)] = 1 + 0j
    return out


def dual_matrix(kind: str, l_or_s: int) -> Matrix:
    """Diagonal q^mu; steps the angle grid by one position."""
    q = deformation_parameter(kind, l_or_s)
    numbers = quantum_numbers(kind, l_or_s)
    out = zeros(len(numbers), len(numbers))
    for i, mu in enumerate(numbers):
        out[i][i] = _int_power(q, mu)
    return out


def angle_matrix(kind: str, l_or_s: int, theta0: float = 0.0) -> Matrix:
    """Hermitian angle operator: sum_n theta_n |theta_n><theta_n|."""
    d = dimension(kind, l_or_s)
    out = zeros(d, d)
    for n in range(d):
        psi = phase_state(kind, l_or_s, n, theta0)
        t = theta(kind, l_or_s, n, theta0)
        for i in range(d):
            for j in range(d):
                out[i][j] += t * psi[i] * psi[j].conjugate()
    return out


def angular_velocity(hamiltonian: Matrix, shift: Matrix, hbar: float = 1.0) -> Matrix:
    return mat_scale(1.0 / hbar, mat_sub(mat_mul(adjoint(shift), mat_mul(hamiltonian, shift)), hamiltonian))


def naive_rate(angle_op: Matrix, hamiltonian: Matrix, hbar: float = 1.0) -> Matrix:
    return mat_scale(1.0 / (1j * hbar), mat_sub(mat_mul(angle_op, hamiltonian), mat_mul(hamiltonian, angle_op)))


def q_comm(a: Matrix, b: Matrix, q: complex) -> Matrix:
    return mat_sub(mat_mul(a, b), mat_scale(q, mat_mul(b, a)))


def rotor_hamiltonian(l: int, mass: float = 1.0, radius: float = 1.0, hbar: float = 1.0) -> Matrix:
    numbers = quantum_numbers(ROTOR, l)
    out = zeros(len(numbers), len(numbers))
    for i, m in enumerate(numbers):
        out[i][i] = complex((m * m) * hbar * hbar / (2.0 * mass * radius * radius))
    return out


def magnetic_hamiltonian(
    l: int,
    larmor_frequency: float,
    mass: float = 1.0,
    radius: float = 1.0,
    hbar: float = 1.0,
) -> Matrix:
    out = rotor_hamiltonian(l, mass, radius, hbar)
    for i, m in enumerate(quantum_numbers(ROTOR, l)):
        out[i][i] -= complex(larmor_frequency * hbar * m)
    return out


def oscillator_hamiltonian(s: int, omega: float = 1.0, hbar: float = 1.0) -> Matrix:
    numbers = quantum_numbers(OSCILLATOR, s)
    out = zeros(len(numbers), len(numbers))
    for i, n in enumerate(numbers):
        out[i][i] = complex((n + 0.5) * hbar * omega)
    return out
