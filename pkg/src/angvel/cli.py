"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage error. Output is
byte-identical across runs with the same configuration unless --header is
given (it prepends a version/timestamp line).
"""
from __future__ import annotations

import sys
from pathlib import Path

import click
import numpy as np

from .linalg import adjoint, max_abs_entry
from .operators import (
    angular_velocity_operator,
    duality_check,
    phase_state_matrix,
    shift_operator,
)
from .report import (
    FORMATS,
    TABLE,
    TabularReport,
    render,
    save_convergence_figure,
    save_expectation_figure,
)
from .spaces import KINDS, OSCILLATOR, ROTOR, make_space
from .systems import (
    ELECTRON_MASS_CGS,
    ELEMENTARY_CHARGE_CGS,
    FREE_ROTOR,
    HBAR_CGS,
    LIGHT_SPEED_CGS,
    MAGNETIC_ROTOR,
    NATURAL,
    OSCILLATOR_SYSTEM,
    SI_GAUSSIAN,
    UNIT_SYSTEMS,
    SystemSpec,
    expectation_table,
    hamiltonian,
    semiclassical_convergence,
)


def _emit(text: str, output: str | None) -> None:
    if output is None:
        click.echo(text, nl=False)
    else:
        Path(output).write_text(text, encoding="utf-8")


def _common_options(command):
    for option in reversed(
        [
            click.option(
                "--format",
                "fmt",
                type=click.Choice(FORMATS),
                default=TABLE,
                show_default=True,
                help="output format",
            ),
            click.option(
                "--output",
                "-o",
                "output",
                type=click.Path(dir_okay=False, writable=True),
                default=None,
                help="write to this file instead of stdout",
            ),
            click.option(
                "--header/--no-header",
                "header",
                default=False,
                show_default=True,
                help="prepend a version/timestamp line",
            ),
        ]
    ):
        command = option(command)
    return command


def _plot_option(command):
    return click.option(
        "--plot",
        "plot_path",
        type=click.Path(dir_okay=False, writable=True),
        default=None,
        help="also render a figure to this path",
    )(command)


def _positive(value: float, name: str) -> float:
    if value <= 0:
        raise click.BadParameter(f"{name} must be > 0, got {value}")
    return value


@click.group()
@click.version_option(package_name="angvel")
def main():
    """Finite phase formalism toolkit: build the operators, verify the identities."""


# ---------------------------------------------------------------------------
# verify


def _unitarity_deviation(u) -> float:
    return max_abs_entry(adjoint(u) @ u - np.eye(u.shape[0], dtype=np.complex128))


def _verification_checks(l: int, tol: float) -> list:
    """(name, deviation, threshold) triples over both kinds and all systems."""
    checks = []
    rotor_space = make_space(ROTOR, l)
    osc_space = make_space(OSCILLATOR, 2 * l)
    for label, space in (("rotor", rotor_space), ("oscillator", osc_space)):
        rep = duality_check(space)
        shift = shift_operator(space)
        basis = phase_state_matrix(space)
        checks += [
            (f"{label} eigenbasis shift interior", rep.eigen_shift_interior, tol),
            (f"{label} eigenbasis shift wrap", rep.eigen_shift_wrap, tol),
            (f"{label} phase-basis dual shift interior", rep.phase_shift_interior, tol),
            (f"{label} phase-basis dual shift wrap", rep.phase_shift_wrap, tol),
            (f"{label} q-commutator norm", rep.q_commutator_norm, tol),
            (f"{label} shift operator unitarity", _unitarity_deviation(shift), tol),
            (f"{label} phase-basis Gram identity", _unitarity_deviation(basis), tol),
        ]
    systems = [
        ("free rotor", rotor_space, SystemSpec(FREE_ROTOR)),
        ("magnetic rotor", rotor_space, SystemSpec(MAGNETIC_ROTOR, b_field=0.2)),
        ("oscillator", osc_space, SystemSpec(OSCILLATOR_SYSTEM)),
    ]
    for name, space, spec in systems:
        h = hamiltonian(space, spec)
        r_op = angular_velocity_operator(h, shift_operator(space), spec.hbar)
        dev = max_abs_entry(r_op - adjoint(r_op))
        threshold = tol * max(1.0, max_abs_entry(h) / spec.hbar)
        checks.append((f"angular velocity hermitian: {name}", dev, threshold))
    return checks


@main.command()
@click.option("--l", "l", type=int, required=True, help="rotor order; the oscillator runs at s=2l")
@click.option("--tol", type=float, default=1e-12, show_default=True, help="base tolerance")
@_common_options
def verify(l, tol, fmt, output, header):
    """Check the operator identities and hermiticity at a given size."""
    if l < 0:
        raise click.BadParameter(f"--l must be >= 0, got {l}")
    if tol <= 0:
        raise click.BadParameter(f"--tol must be > 0, got {tol}")
    checks = _verification_checks(l, tol)
    rows = tuple(
        (name, dev, thr, "pass" if dev <= thr else "fail") for name, dev, thr in checks
    )
    failures = sum(1 for row in rows if row[3] == "fail")
    report = TabularReport(
        config={"l": l, "tol": tol},
        columns=("check", "deviation", "threshold", "status"),
        rows=rows,
        summary={"checks": len(rows), "failures": failures},
    )
    _emit(render(report, fmt, header), output)
    if failures:
        sys.exit(1)


# ---------------------------------------------------------------------------
# expectation tables


def _expectation_command(space, spec, fmt, output, header, plot_path, config, label):
    table = expectation_table(space, spec)
    rows = tuple(
        (r.quantum_number, r.r_expectation, r.semiclassical_target, r.rel_error, r.wrap)
        for r in table.rows
    )
    report = TabularReport(
        config=config,
        columns=(label, "r_expectation", "semiclassical_target", "rel_error", "wrap_flag"),
        rows=rows,
        summary=table.summary,
    )
    _emit(render(report, fmt, header), output)
    if plot_path:
        save_expectation_figure(table, plot_path)


@main.command("rotor-table")
@click.option("--l", "l", type=int, required=True, help="rotor order (dimension 2l+1)")
@click.option("--mass", type=float, default=1.0, show_default=True)
@click.option("--radius", type=float, default=1.0, show_default=True)
@click.option("--hbar", type=float, default=1.0, show_default=True)
@_plot_option
@_common_options
def rotor_table(l, mass, radius, hbar, plot_path, fmt, output, header):
    """Per-m angular velocity expectations for the free rotor."""
    if l < 0:
        raise click.BadParameter(f"--l must be >= 0, got {l}")
    for name, value in (("--mass", mass), ("--radius", radius), ("--hbar", hbar)):
        _positive(value, name)
    spec = SystemSpec(FREE_ROTOR, mass=mass, radius=radius, hbar=hbar)
    config = {"l": l, "mass": mass, "radius": radius, "hbar": hbar}
    _expectation_command(make_space(ROTOR, l), spec, fmt, output, header, plot_path, config, "m")


@main.command("oscillator-table")
@click.option("--s", "s", type=int, required=True, help="truncation order (dimension s+1)")
@click.option("--omega", type=float, default=1.0, show_default=True)
@click.option("--hbar", type=float, default=1.0, show_default=True)
@_plot_option
@_common_options
def oscillator_table(s, omega, hbar, plot_path, fmt, output, header):
    """Per-n angular velocity expectations for the truncated oscillator."""
    if s < 0:
        raise click.BadParameter(f"--s must be >= 0, got {s}")
    for name, value in (("--omega", omega), ("--hbar", hbar)):
        _positive(value, name)
    spec = SystemSpec(OSCILLATOR_SYSTEM, omega=omega, hbar=hbar)
    config = {"s": s, "omega": omega, "hbar": hbar}
    _expectation_command(make_space(OSCILLATOR, s), spec, fmt, output, header, plot_path, config, "n")


# ---------------------------------------------------------------------------
# larmor


@main.command()
@click.option("--l", "l", type=int, required=True, help="rotor order")
@click.option("--b-field", type=float, default=None, help="magnetic field (Gauss in si-gaussian)")
@click.option("--omega-larmor", type=float, default=None, help="set e*B/(2*M*c) directly instead of --b-field")
@click.option("--mass", type=float, default=None, help="defaults to 1 (natural) or the electron mass (si-gaussian)")
@click.option("--radius", type=float, default=None, help="defaults to 1")
@click.option("--hbar", type=float, default=None, help="defaults to 1 (natural) or the CGS value (si-gaussian)")
@click.option("--charge", type=float, default=None, help="defaults to 1 (natural) or e in statC (si-gaussian)")
@click.option("--light-speed", type=float, default=None, help="defaults to 1 (natural) or c in cm/s (si-gaussian)")
@click.option("--units", type=click.Choice(UNIT_SYSTEMS), default=NATURAL, show_default=True)
@_plot_option
@_common_options
def larmor(l, b_field, omega_larmor, mass, radius, hbar, charge, light_speed, units, plot_path, fmt, output, header):
    """Uniform shift of every interior <R> row under a magnetic field."""
    if l < 1:
        raise click.BadParameter(f"--l must be >= 1, got {l}")
    if units == NATURAL:
        defaults = {"mass": 1.0, "radius": 1.0, "hbar": 1.0, "charge": 1.0, "light_speed": 1.0}
    else:
        defaults = {
            "mass": ELECTRON_MASS_CGS,
            "radius": 1.0,
            "hbar": HBAR_CGS,
            "charge": ELEMENTARY_CHARGE_CGS,
            "light_speed": LIGHT_SPEED_CGS,
        }
    mass = defaults["mass"] if mass is None else _positive(mass, "--mass")
    radius = defaults["radius"] if radius is None else _positive(radius, "--radius")
    hbar = defaults["hbar"] if hbar is None else _positive(hbar, "--hbar")
    light_speed = defaults["light_speed"] if light_speed is None else _positive(light_speed, "--light-speed")
    charge = defaults["charge"] if charge is None else charge
    if charge == 0:
        raise click.BadParameter("--charge must be nonzero")
    if omega_larmor is not None:
        b_field = omega_larmor * 2.0 * mass * light_speed / charge
    elif b_field is None:
        raise click.UsageError("either --b-field or --omega-larmor is required")
    spec = SystemSpec(
        MAGNETIC_ROTOR,
        mass=mass,
        radius=radius,
        hbar=hbar,
        b_field=b_field,
        charge=charge,
        light_speed=light_speed,
        units=units,
    )
    table = expectation_table(make_space(ROTOR, l), spec)
    rows = tuple((r.quantum_number, r.r_expectation, r.shift, r.wrap) for r in table.rows)
    config = {"l": l, "units": units, "b_field": b_field, "mass": mass, "radius": radius,
              "hbar": hbar, "charge": charge, "light_speed": light_speed}
    report = TabularReport(
        config=config,
        columns=("m", "r_expectation", "shift", "wrap_flag"),
        rows=rows,
        summary=table.summary,
    )
    _emit(render(report, fmt, header), output)
    if plot_path:
        save_expectation_figure(table, plot_path)


# ---------------------------------------------------------------------------
# converge


@main.command()
@click.option("--m-fraction", type=float, required=True, help="m = round(m_fraction * l), 0 < fraction < 1")
@click.option("--l-list", "l_list", type=str, required=True, help="comma-separated rotor orders, e.g. 10,100,1000")
@click.option("--mass", type=float, default=1.0, show_default=True)
@click.option("--radius", type=float, default=1.0, show_default=True)
@click.option("--hbar", type=float, default=1.0, show_default=True)
@_plot_option
@_common_options
def converge(m_fraction, l_list, mass, radius, hbar, plot_path, fmt, output, header):
    """Sweep l and track the relative error against the classical rate."""
    for name, value in (("--mass", mass), ("--radius", radius), ("--hbar", hbar)):
        _positive(value, name)
    try:
        ls = [int(part) for part in l_list.split(",") if part.strip()]
    except ValueError:
        raise click.BadParameter(f"--l-list must be comma-separated integers, got {l_list!r}")
    spec = SystemSpec(FREE_ROTOR, mass=mass, radius=radius, hbar=hbar)
    try:
        result = semiclassical_convergence(m_fraction, ls, spec)
    except ValueError as exc:
        raise click.BadParameter(str(exc))
    rows = tuple(
        (r.l, r.m, r.r_expectation, r.semiclassical_target, r.rel_error) for r in result.rows
    )
    report = TabularReport(
        config={"m_fraction": m_fraction, "l_list": ",".join(str(l) for l in ls),
                "mass": mass, "radius": radius, "hbar": hbar},
        columns=("l", "m", "r_expectation", "semiclassical_target", "rel_error"),
        rows=rows,
        summary=result.summary,
    )
    _emit(render(report, fmt, header), output)
    if plot_path:
        save_convergence_figure(result, plot_path)


# ---------------------------------------------------------------------------
# dump-phase-states


@main.command("dump-phase-states")
@click.option("--kind", type=click.Choice(KINDS), default=ROTOR, show_default=True)
@click.option("--l", "l", type=int, default=None, help="rotor order (rotor kind only)")
@click.option("--s", "s", type=int, default=None, help="truncation order (oscillator kind only)")
@click.option("--theta0", type=float, default=0.0, show_default=True, help="reference angle of the grid")
@_common_options
def dump_phase_states(kind, l, s, theta0, fmt, output, header):
    """Emit every phase-state amplitude (re, im) on the chosen grid."""
    if kind == ROTOR:
        if l is None:
            raise click.UsageError("--l is required for the rotor kind")
        if s is not None:
            raise click.UsageError("--s applies to the oscillator kind only")
        order = l
    else:
        if s is None:
            raise click.UsageError("--s is required for the oscillator kind")
        if l is not None:
            raise click.UsageError("--l applies to the rotor kind only")
        order = s
    if order < 0:
        raise click.BadParameter(f"order must be >= 0, got {order}")
    space = make_space(kind, order, theta0)
    basis = phase_state_matrix(space)
    rows = []
    for n in range(space.dim):
        angle = space.theta(n)
        for i, qn in enumerate(space.quantum_numbers):
            amp = basis[i, n]
            rows.append((n, angle, int(qn), float(amp.real), float(amp.imag)))
    report = TabularReport(
        config={"kind": kind, "order": order, "theta0": theta0},
        columns=("state_index", "theta", "quantum_number", "re", "im"),
        rows=tuple(rows),
        summary={"dim": space.dim, "states": space.dim},
    )
    _emit(render(report, fmt, header), output)


if __name__ == "__main__":
    main()
