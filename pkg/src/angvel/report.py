"""Rendering of run reports: aligned text tables, RFC 4180 CSV, JSON, figures.

Output is byte-deterministic for a fixed configuration; the only
non-deterministic content (a version/timestamp line) appears when a header is
explicitly requested. CSV carries the column row plus data rows only; table
and JSON additionally carry the config echo and the summary block.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from datetime import datetime, timezone
from importlib import metadata

TABLE = "table"
CSV = "csv"
JSON = "json"
FORMATS = (TABLE, CSV, JSON)


@dataclass(frozen=True)
class TabularReport:
    """Format-agnostic payload: echoed config, column names, rows, summary."""

    config: dict
    columns: tuple
    rows: tuple
    summary: dict


def package_version() -> str:
    try:
        return metadata.version("angvel")
    except metadata.PackageNotFoundError:
        return "0+unknown"


def _timestamp() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def _header_line() -> str:
    return f"angvel {package_version()} generated {_timestamp()}"


def _cell(value) -> str:
    """Canonical text form: floats as .17g (round-trips), None empty."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".17g")
    return str(value)


def render_csv(report: TabularReport, header: bool = False) -> str:
    buf = io.StringIO()
    if header:
        buf.write(f"# {_header_line()}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(report.columns)
    for row in report.rows:
        writer.writerow([_cell(v) for v in row])
    return buf.getvalue()


def render_json(report: TabularReport, header: bool = False) -> str:
    payload = {
        "config": report.config,
        "rows": [dict(zip(report.columns, row)) for row in report.rows],
        "summary": report.summary,
    }
    if header:
        payload["meta"] = {"version": package_version(), "generated": _timestamp()}
    return json.dumps(payload, indent=2) + "\n"


def render_table(report: TabularReport, header: bool = False) -> str:
    lines = []
    if header:
        lines.append(f"# {_header_line()}")
    if report.config:
        lines.append("config: " + " ".join(f"{k}={_cell(v)}" for k, v in report.config.items()))
    cells = [[_cell(v) for v in row] for row in report.rows]
    names = [str(c) for c in report.columns]
    widths = [max(len(n), *(len(r[i]) for r in cells)) if cells else len(n) for i, n in enumerate(names)]
    lines.append("  ".join(n.ljust(w) for n, w in zip(names, widths)).rstrip())
    lines.append("  ".join("-" * w for w in widths))
    for row in cells:
        lines.append("  ".join(c.rjust(w) for c, w in zip(row, widths)).rstrip())
    if report.summary:
        lines.append("summary:")
        for k, v in report.summary.items():
            lines.append(f"  {k} = {_cell(v)}")
    return "\n".join(lines) + "\n"


def render(report: TabularReport, fmt: str, header: bool = False) -> str:
    if fmt == CSV:
        return render_csv(report, header)
    if fmt == JSON:
        return render_json(report, header)
    if fmt == TABLE:
        return render_table(report, header)
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


# ---------------------------------------------------------------------------
# figures (rendered straight to files; no pyplot global state)


def _make_figure():
    from matplotlib.backends.backend_agg import FigureCanvasAgg
    from matplotlib.figure import Figure

    fig = Figure(figsize=(6.4, 4.2), dpi=120)
    FigureCanvasAgg(fig)
    return fig


def save_expectation_figure(report, path: str) -> None:
    """Plot per-state <R> against the semiclassical target; mark the wrap state."""
    fig = _make_figure()
    ax = fig.add_subplot(111)
    interior = [r for r in report.rows if not r.wrap]
    wrapped = [r for r in report.rows if r.wrap]
    ax.plot(
        [r.quantum_number for r in report.rows],
        [r.semiclassical_target for r in report.rows],
        "-",
        color="0.6",
        lw=1.0,
        label="semiclassical target",
    )
    ax.plot(
        [r.quantum_number for r in interior],
        [r.r_expectation for r in interior],
        "o",
        ms=3.5,
        label="angular velocity expectation",
    )
    ax.plot(
        [r.quantum_number for r in wrapped],
        [r.r_expectation for r in wrapped],
        "rx",
        ms=7,
        label="wrap state",
    )
    ax.set_xlabel("quantum number")
    ax.set_ylabel("expectation value")
    ax.set_title(f"{report.spec.kind}: per-state angular velocity (dim={report.space.dim})")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path)


def save_convergence_figure(report, path: str) -> None:
    """Log-log relative error of <m|R|m> against the closed form 1/(2m)."""
    fig = _make_figure()
    ax = fig.add_subplot(111)
    ls = [r.l for r in report.rows]
    ax.loglog(ls, [r.rel_error for r in report.rows], "o-", label="measured rel. error")
    ax.loglog(ls, [1.0 / (2.0 * r.m) for r in report.rows], "k--", lw=1.0, label="1/(2m)")
    ax.set_xlabel("l")
    ax.set_ylabel("relative error")
    ax.set_title(f"semiclassical limit, m = round({report.m_fraction} * l)")
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(path)
