"""The three physical systems: Hamiltonians, expectation tables, limits."""
from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .operators import angular_velocity_operator, shift_operator
from .spaces import OSCILLATOR, ROTOR, FinitePhaseSpace, make_space

FREE_ROTOR = "free_rotor"
MAGNETIC_ROTOR = "magnetic_rotor"
OSCILLATOR_SYSTEM = "oscillator"
SYSTEM_KINDS = (FREE_ROTOR, MAGNETIC_ROTOR, OSCILLATOR_SYSTEM)

NATURAL = "natural"
SI_GAUSSIAN = "si-gaussian"
UNIT_SYSTEMS = (NATURAL, SI_GAUSSIAN)

# Gaussian-unit constants backing the si-gaussian parameterization (CGS).
LIGHT_SPEED_CGS = 2.99792458e10          # cm / s
ELEMENTARY_CHARGE_CGS = 4.80320471e-10   # statC
HBAR_CGS = 1.054571817e-27               # erg * s
ELECTRON_MASS_CGS = 9.1093837015e-28     # g


@dataclass(frozen=True)
class SystemSpec:
    """Physical parameters of a system; the defaults are natural units.

    The magnetic coupling is -omega_larmor * hbar * m on the diagonal with
    omega_larmor = charge * b_field / (2 * mass * light_speed), the Gaussian
    form; in natural units set b_field (and keep charge = light_speed = 1) or
    pick omega_larmor directly via b_field = 2 * omega_larmor.
    """

    kind: str
    mass: float = 1.0
    radius: float = 1.0
    hbar: float = 1.0
    omega: float = 1.0
    b_field: float = 0.0
    charge: float = 1.0
    light_speed: float = 1.0
    units: str = NATURAL

    def __post_init__(self):
        if self.kind not in SYSTEM_KINDS:
            raise ValueError(f"unknown system kind {self.kind!r}; expected one of {SYSTEM_KINDS}")
        if self.units not in UNIT_SYSTEMS:
            raise ValueError(f"unknown unit system {self.units!r}; expected one of {UNIT_SYSTEMS}")
        for name in ("mass", "radius", "hbar", "light_speed"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be > 0, got {getattr(self, name)}")
        if self.kind == OSCILLATOR_SYSTEM and self.omega <= 0:
            raise ValueError(f"omega must be > 0, got {self.omega}")

    @property
    def larmor_frequency(self) -> float:
        """omega_L = e*B/(2*M*c); sign follows b_field and charge."""
        return self.charge * self.b_field / (2.0 * self.mass * self.light_speed)


def gaussian_electron_ring(radius_cm: float, b_gauss: float) -> SystemSpec:
    """Electron on a ring in CGS-Gaussian units with field b_gauss."""
    return SystemSpec(
        kind=MAGNETIC_ROTOR,
        mass=ELECTRON_MASS_CGS,
        radius=radius_cm,
        hbar=HBAR_CGS,
        b_field=b_gauss,
        charge=ELEMENTARY_CHARGE_CGS,
        light_speed=LIGHT_SPEED_CGS,
        units=SI_GAUSSIAN,
    )


def rotor_hamiltonian(space: FinitePhaseSpace, spec: SystemSpec) -> np.ndarray:
    """Kinetic energy m^2 hbar^2 / (2 M R^2) on the angular-momentum diagonal."""
    if space.kind != ROTOR:
        raise ValueError(f"rotor Hamiltonian needs a rotor space, got {space.kind!r}")
    if spec.kind not in (FREE_ROTOR, MAGNETIC_ROTOR):
        raise ValueError(f"rotor Hamiltonian needs a rotor system, got {spec.kind!r}")
    m = space.quantum_numbers.astype(np.float64)
    scale = spec.hbar**2 / (2.0 * spec.mass * spec.radius**2)
    return np.diag((m * m) * scale).astype(np.complex128)


def magnetic_hamiltonian(space: FinitePhaseSpace, spec: SystemSpec) -> np.ndarray:
    """Kinetic term minus the field coupling omega_L * hbar * m."""
    if spec.kind != MAGNETIC_ROTOR:
        raise ValueError(f"magnetic Hamiltonian needs kind {MAGNETIC_ROTOR!r}, got {spec.kind!r}")
    m = space.quantum_numbers.astype(np.float64)
    coupling = np.diag(spec.larmor_frequency * spec.hbar * m).astype(np.complex128)
    return rotor_hamiltonian(space, spec) - coupling


def oscillator_hamiltonian(space: FinitePhaseSpace, spec: SystemSpec) -> np.ndarray:
    """(n + 1/2) hbar omega on the number diagonal."""
    if space.kind != OSCILLATOR:
        raise ValueError(f"oscillator Hamiltonian needs an oscillator space, got {space.kind!r}")
    if spec.kind != OSCILLATOR_SYSTEM:
        raise ValueError(f"oscillator Hamiltonian needs kind {OSCILLATOR_SYSTEM!r}, got {spec.kind!r}")
    n = space.quantum_numbers.astype(np.float64)
    return np.diag((n + 0.5) * spec.hbar * spec.omega).astype(np.complex128)


def hamiltonian(space: FinitePhaseSpace, spec: SystemSpec) -> np.ndarray:
    """Dispatch to the Hamiltonian matching spec.kind."""
    if spec.kind == FREE_ROTOR:
        return rotor_hamiltonian(space, spec)
    if spec.kind == MAGNETIC_ROTOR:
        return magnetic_hamiltonian(space, spec)
    return oscillator_hamiltonian(space, spec)


@dataclass(frozen=True)
class ExpectationRow:
    """One basis state: measured <R>, its semiclassical target, deviations.

    rel_error is None when the target vanishes (m = 0 and the wrapped edge of
    the free rotor); shift is the diagonal of R_B - R_0 and is None outside
    the magnetic system.
    """

    quantum_number: int
    r_expectation: float
    semiclassical_target: float
    abs_deviation: float
    rel_error: float | None
    shift: float | None
    wrap: bool


@dataclass(frozen=True)
class ExpectationReport:
    space: FinitePhaseSpace
    spec: SystemSpec
    rows: tuple[ExpectationRow, ...]
    summary: dict


def _semiclassical_target(spec: SystemSpec, qn: int) -> float:
    if spec.kind == OSCILLATOR_SYSTEM:
        return spec.omega
    target = spec.hbar * qn / (spec.mass * spec.radius**2)
    if spec.kind == MAGNETIC_ROTOR:
        target -= spec.larmor_frequency
    return target


def expectation_table(space: FinitePhaseSpace, spec: SystemSpec) -> ExpectationReport:
    """Per-basis-state <R> with semiclassical targets and wrap annotation.

    The top basis state feeds the cyclic wraparound of the shift operator, so
    the interior formulas do not apply there; its row is flagged wrap=True.
    """
    h = hamiltonian(space, spec)
    shift_op = shift_operator(space)
    r_op = angular_velocity_operator(h, shift_op, spec.hbar)
    diag = np.diagonal(r_op)
    scale = max(1.0, float(np.max(np.abs(diag.real))))
    if float(np.max(np.abs(diag.imag))) > 1e-12 * scale:
        raise RuntimeError("angular velocity diagonal is not real; Hamiltonian not hermitian?")

    shifts = None
    if spec.kind == MAGNETIC_ROTOR:
        free = replace(spec, kind=FREE_ROTOR, b_field=0.0)
        r_free = angular_velocity_operator(rotor_hamiltonian(space, free), shift_op, spec.hbar)
        shifts = (diag - np.diagonal(r_free)).real

    rows = []
    top = space.dim - 1
    for i, qn in enumerate(space.quantum_numbers):
        value = float(diag[i].real)
        target = _semiclassical_target(spec, int(qn))
        dev = abs(value - target)
        rows.append(
            ExpectationRow(
                quantum_number=int(qn),
                r_expectation=value,
                semiclassical_target=target,
                abs_deviation=dev,
                rel_error=dev / abs(target) if target != 0.0 else None,
                shift=float(shifts[i]) if shifts is not None else None,
                wrap=i == top,
            )
        )

    edge = rows[-1]
    summary = {
        "kind": spec.kind,
        "dim": space.dim,
        "edge_quantum_number": edge.quantum_number,
        "edge_r_expectation": edge.r_expectation,
        "edge_note": "top state wraps to the bottom; interior formulas do not apply",
    }
    if shifts is not None:
        interior = shifts[:-1]
        wl = spec.larmor_frequency
        measured = float(interior.mean()) if interior.size else None
        summary.update(
            {
                "larmor_frequency": wl,
                "expected_interior_shift": -wl,
                "measured_interior_shift": measured,
                "shift_abs_difference": float(np.max(np.abs(interior + wl))) if interior.size else None,
                "edge_shift": float(shifts[-1]),
            }
        )
    return ExpectationReport(space=space, spec=spec, rows=tuple(rows), summary=summary)


@dataclass(frozen=True)
class ConvergenceRow:
    l: int
    m: int
    r_expectation: float
    semiclassical_target: float
    rel_error: float


@dataclass(frozen=True)
class ConvergenceReport:
    m_fraction: float
    spec: SystemSpec
    rows: tuple[ConvergenceRow, ...]
    summary: dict


def semiclassical_convergence(m_fraction: float, l_values, spec: SystemSpec) -> ConvergenceReport:
    """Large-l limit: <m|R|m> against the classical rate hbar*m/(M R^2).

    m = round(m_fraction * l) must stay strictly inside 0 < m < l; the
    relative error then has the closed form 1/(2m), so it decreases
    monotonically along any sweep with increasing m.
    """
    if spec.kind != FREE_ROTOR:
        raise ValueError(f"convergence sweep is defined for {FREE_ROTOR!r}, got {spec.kind!r}")
    if not 0.0 < m_fraction < 1.0:
        raise ValueError(f"m_fraction must lie in (0, 1), got {m_fraction}")
    ls = sorted(set(int(l) for l in l_values))
    if not ls:
        raise ValueError("need at least one l value")
    pairs = []
    for l in ls:
        if l < 2:
            raise ValueError(f"l={l}: need l >= 2")
        m = round(m_fraction * l)
        if not 1 <= m < l:
            raise ValueError(f"l={l}: m_fraction={m_fraction} gives m={m}, need 1 <= m < l")
        pairs.append((l, m))

    rows = []
    for l, m in pairs:
        space = make_space(ROTOR, l)
        r_op = angular_velocity_operator(rotor_hamiltonian(space, spec), shift_operator(space), spec.hbar)
        i = space.index_of(m)
        value = float(r_op[i, i].real)
        target = spec.hbar * m / (spec.mass * spec.radius**2)
        rows.append(
            ConvergenceRow(
                l=l,
                m=m,
                r_expectation=value,
                semiclassical_target=target,
                rel_error=abs(value - target) / abs(target),
            )
        )

    closed_dev = max(abs(r.rel_error - 1.0 / (2.0 * r.m)) for r in rows)
    monotone = all(b.rel_error < a.rel_error for a, b in zip(rows, rows[1:]))
    summary = {
        "m_fraction": m_fraction,
        "max_closed_form_deviation": closed_dev,
        "rel_error_monotone_decreasing": monotone,
    }
    return ConvergenceReport(m_fraction=m_fraction, spec=spec, rows=tuple(rows), summary=summary)
