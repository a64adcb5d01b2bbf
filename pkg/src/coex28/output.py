"""Artifact renderers: CSV series, static SVG charts, and text tables.

Every renderer is deterministic: fixed numeric formats, no timestamps, no
environment-dependent content. Assumptions (noise figure included) are
written into every artifact so results are never quoted without the inputs
that produced them.
"""

from __future__ import annotations

import math
from dataclasses import replace
from typing import Optional

from .config import RunConfig, scenario_from_config
from .engine import SweepSeries, separation_distance, snr_ceiling_db
from .linkbudget import EsClass, Lobe, eirp_density_dbm_per_ghz
from .units import PowerRatioDb

CSV_HEADER_SINGLE = "distance_m,sinr_db"
CSV_HEADER_MULTI = "distance_m,sinr_db,series"

_ASSUMPTION_NOTE = (
    "note: results depend on lobe, count, and noise_figure; compare externally "
    "reported distances only under matching assumptions"
)


def _fmt(x: float) -> str:
    return f"{x:g}"


def series_label(count: int) -> str:
    return f"n{count}"


def _scenario_assumptions(cfg: RunConfig, include_class: bool = True) -> list[str]:
    lines = []
    if include_class:
        lines.append(f"class = {cfg.es_class}")
        lines.append(f"lobe = {cfg.lobe}")
    if cfg.counts is not None:
        lines.append("counts = " + ",".join(str(c) for c in cfg.counts))
    else:
        lines.append(f"count = {cfg.count}")
    lines += [
        f"rsrp_dbm = {_fmt(cfg.rsrp)}",
        f"noise_figure_db = {_fmt(cfg.noise_figure)}",
        f"temperature_k = {_fmt(cfg.temperature)}",
        f"frequency_hz = {_fmt(cfg.frequency)}",
        f"bandwidth_hz = {_fmt(cfg.bandwidth)}",
    ]
    ceiling = snr_ceiling_db(scenario_from_config(cfg)).value
    lines.append(f"snr_ceiling_db = {ceiling:.6f}")
    return lines


def sweep_assumptions(cfg: RunConfig) -> list[str]:
    lines = _scenario_assumptions(cfg)
    lines += [
        f"d_start_m = {_fmt(cfg.d_start)}",
        f"d_stop_m = {_fmt(cfg.d_stop)}",
        f"step_m = {_fmt(cfg.step)}",
        _ASSUMPTION_NOTE,
    ]
    return lines


def separation_assumptions(cfg: RunConfig) -> list[str]:
    # class/lobe omitted: the table spans every class x lobe cell
    lines = _scenario_assumptions(cfg, include_class=False)
    lines += [
        f"threshold_db = {_fmt(cfg.threshold)}",
        _ASSUMPTION_NOTE,
    ]
    return lines


def render_sweep_csv(series: list[tuple[str, SweepSeries]], assumptions: list[str]) -> str:
    """CSV with '#' assumption preamble; 6 decimal places on all numerics.

    One (label, series) pair emits the two-column schema; several pairs emit
    the three-column schema with the label in the trailing `series` column.
    """
    multi = len(series) > 1
    lines = [f"# {a}" for a in assumptions]
    lines.append(CSV_HEADER_MULTI if multi else CSV_HEADER_SINGLE)
    for label, swp in series:
        for distance_m, sinr in swp.samples:
            row = f"{distance_m:.6f},{sinr.value:.6f}"
            lines.append(f"{row},{label}" if multi else row)
    return "\n".join(lines) + "\n"


def parse_sweep_csv(text: str) -> list[tuple[float, float, Optional[str]]]:
    """Re-read a sweep CSV: (distance_m, sinr_db, series-or-None) per row."""
    rows = []
    data_lines = [ln for ln in text.splitlines() if ln and not ln.startswith("#")]
    if not data_lines or data_lines[0] not in (CSV_HEADER_SINGLE, CSV_HEADER_MULTI):
        raise ValueError("not a sweep CSV: missing header")
    multi = data_lines[0] == CSV_HEADER_MULTI
    for ln in data_lines[1:]:
        parts = ln.split(",")
        if len(parts) != (3 if multi else 2):
            raise ValueError(f"malformed CSV row: {ln!r}")
        rows.append((float(parts[0]), float(parts[1]), parts[2] if multi else None))
    return rows


def render_eirp_table() -> str:
    """The 3x2 EIRP density table (dBm/GHz), one row per class."""
    lines = ["class | mainlobe_dbm_per_ghz | sidelobe_dbm_per_ghz"]
    for es_class in EsClass:
        main = eirp_density_dbm_per_ghz(es_class, Lobe.MAINLOBE)
        side = eirp_density_dbm_per_ghz(es_class, Lobe.SIDELOBE)
        lines.append(f"Class {es_class.value} | {main:.1f} | {side:.1f}")
    return "\n".join(lines) + "\n"


def render_separation_table(cfg: RunConfig, assumptions: list[str]) -> str:
    """Separation distances for every class x lobe cell at the configured
    count and threshold; cells the threshold cannot reach render as
    "unattainable"."""
    threshold = PowerRatioDb(cfg.threshold)
    lines = [f"# {a}" for a in assumptions]
    lines.append("class | mainlobe_m | sidelobe_m")
    for es_class in EsClass:
        cells = []
        for lobe in (Lobe.MAINLOBE, Lobe.SIDELOBE):
            cfg_cell = replace(cfg, es_class=es_class.value, lobe=lobe.value)
            result = separation_distance(scenario_from_config(cfg_cell), threshold)
            cells.append(f"{result.distance_m:.2f}" if result.attainable else "unattainable")
        lines.append(f"Class {es_class.value} | {cells[0]} | {cells[1]}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# SVG line chart
# ---------------------------------------------------------------------------

_SVG_W, _SVG_H = 800.0, 500.0
_PLOT_X0, _PLOT_Y0, _PLOT_X1, _PLOT_Y1 = 72.0, 64.0, 768.0, 432.0
_PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")


def _ticks(lo: float, hi: float, target: int = 6) -> list[float]:
    span = hi - lo
    if span <= 0.0:
        return [lo]
    raw = span / target
    mag = 10.0 ** math.floor(math.log10(raw))
    step = mag * 10.0
    for mult in (1.0, 2.0, 5.0):
        if span / (mag * mult) <= target:
            step = mag * mult
            break
    first = math.ceil(lo / step - 1e-9)
    last = math.floor(hi / step + 1e-9)
    return [k * step for k in range(int(first), int(last) + 1)]


def render_sweep_svg(
    series: list[tuple[str, SweepSeries]],
    assumptions: list[str],
    title: str,
) -> str:
    """Self-contained static line chart: axes, one polyline per series, legend."""
    xs = [d for _, swp in series for d, _ in swp.samples]
    ys = [s.value for _, swp in series for _, s in swp.samples]
    x_lo, x_hi = min(xs), max(xs)
    y_lo, y_hi = min(ys), max(ys)
    pad = 0.05 * (y_hi - y_lo) if y_hi > y_lo else 1.0
    y_lo -= pad
    y_hi += pad

    def px(x: float) -> float:
        return _PLOT_X0 + (x - x_lo) / (x_hi - x_lo) * (_PLOT_X1 - _PLOT_X0)

    def py(y: float) -> float:
        return _PLOT_Y1 - (y - y_lo) / (y_hi - y_lo) * (_PLOT_Y1 - _PLOT_Y0)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SVG_W:.0f}" '
        f'height="{_SVG_H:.0f}" viewBox="0 0 {_SVG_W:.0f} {_SVG_H:.0f}">',
        f"<desc>{'; '.join(assumptions)}</desc>",
        f'<rect width="{_SVG_W:.0f}" height="{_SVG_H:.0f}" fill="#ffffff"/>',
        f'<text x="{_SVG_W / 2:.0f}" y="28" text-anchor="middle" '
        f'font-family="sans-serif" font-size="16">{title}</text>',
    ]
    # compact one-line recap under the title; the trailing note line and the
    # sweep-grid lines live in <desc> only
    subtitle = ", ".join(
        a for a in assumptions[:-1] if not a.startswith(("d_", "step_"))
    )
    out.append(
        f'<text x="{_SVG_W / 2:.0f}" y="48" text-anchor="middle" '
        f'font-family="sans-serif" font-size="10" fill="#555555">{subtitle}</text>'
    )
    out.append(
        f'<rect x="{_PLOT_X0:.2f}" y="{_PLOT_Y0:.2f}" width="{_PLOT_X1 - _PLOT_X0:.2f}" '
        f'height="{_PLOT_Y1 - _PLOT_Y0:.2f}" fill="none" stroke="#333333"/>'
    )
    for tx in _ticks(x_lo, x_hi):
        x = px(tx)
        out.append(
            f'<line x1="{x:.2f}" y1="{_PLOT_Y0:.2f}" x2="{x:.2f}" y2="{_PLOT_Y1:.2f}" '
            f'stroke="#dddddd"/>'
        )
        out.append(
            f'<text x="{x:.2f}" y="{_PLOT_Y1 + 18:.2f}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="11">{_fmt(tx)}</text>'
        )
    for ty in _ticks(y_lo, y_hi):
        y = py(ty)
        out.append(
            f'<line x1="{_PLOT_X0:.2f}" y1="{y:.2f}" x2="{_PLOT_X1:.2f}" y2="{y:.2f}" '
            f'stroke="#dddddd"/>'
        )
        out.append(
            f'<text x="{_PLOT_X0 - 8:.2f}" y="{y + 4:.2f}" text-anchor="end" '
            f'font-family="sans-serif" font-size="11">{_fmt(ty)}</text>'
        )
    out.append(
        f'<text x="{(_PLOT_X0 + _PLOT_X1) / 2:.2f}" y="{_SVG_H - 14:.2f}" '
        f'text-anchor="middle" font-family="sans-serif" font-size="12">distance (m)</text>'
    )
    mid_y = (_PLOT_Y0 + _PLOT_Y1) / 2
    out.append(
        f'<text x="20" y="{mid_y:.2f}" text-anchor="middle" font-family="sans-serif" '
        f'font-size="12" transform="rotate(-90 20 {mid_y:.2f})">SINR (dB)</text>'
    )
    for i, (label, swp) in enumerate(series):
        color = _PALETTE[i % len(_PALETTE)]
        points = " ".join(f"{px(d):.2f},{py(s.value):.2f}" for d, s in swp.samples)
        out.append(f'<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{points}"/>')
        ly = _PLOT_Y0 + 16 + 16 * i
        out.append(
            f'<line x1="{_PLOT_X1 - 120:.2f}" y1="{ly:.2f}" x2="{_PLOT_X1 - 92:.2f}" '
            f'y2="{ly:.2f}" stroke="{color}" stroke-width="2"/>'
        )
        out.append(
            f'<text x="{_PLOT_X1 - 86:.2f}" y="{ly + 4:.2f}" font-family="sans-serif" '
            f'font-size="11">{label}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
