"""Command-line interface: `sweep`, `separation`, and `eirp-table` subcommands.

Exit codes: 0 success, 2 validation error (bad flags, bad config values),
3 I/O error (unreadable config, unwritable output).
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional

from .config import ConfigError, RunConfig, parse_config, parse_counts, scenario_from_config
from .engine import sweep
from .output import (
    render_eirp_table,
    render_separation_table,
    render_sweep_csv,
    render_sweep_svg,
    separation_assumptions,
    series_label,
    sweep_assumptions,
)
from .units import PowerRatioDb

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_IO = 3


def _counts_flag(raw: str) -> tuple[int, ...]:
    try:
        return parse_counts(raw)
    except ConfigError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _add_shared_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--class", dest="es_class", type=int, choices=(1, 2, 3),
                   help="earth-station class")
    p.add_argument("--lobe", choices=("mainlobe", "sidelobe"),
                   help="which antenna lobe points at the victim")
    p.add_argument("--count", type=int, help="number of equidistant transmitters")
    p.add_argument("--counts", type=_counts_flag, metavar="N,N,...",
                   help="sweep only: emit one series per transmitter count, e.g. 1,5,10")
    p.add_argument("--rsrp-dbm", dest="rsrp", type=float, help="victim desired-signal level")
    p.add_argument("--nf-db", dest="noise_figure", type=float, help="victim noise figure")
    p.add_argument("--freq-hz", dest="frequency", type=float, help="carrier frequency")
    p.add_argument("--bw-hz", dest="bandwidth", type=float, help="victim bandwidth")
    p.add_argument("--d-start", dest="d_start", type=float, help="sweep start distance, m")
    p.add_argument("--d-stop", dest="d_stop", type=float, help="sweep stop distance, m")
    p.add_argument("--step", type=float, help="sweep step, m")
    p.add_argument("--threshold-db", dest="threshold", type=float,
                   help="SINR threshold for separation solving")
    p.add_argument("--config", help="flat key=value config file; flags override it")
    p.add_argument("--out", help="output path (default: stdout)")
    p.add_argument("--format", choices=("csv", "svg", "table"), help="output format")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coex28",
        description="Deterministic 28 GHz coexistence simulator: interference from "
        "satellite earth stations into a 5G receiver.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in (
        ("sweep", "emit SINR vs distance as CSV or SVG"),
        ("separation", "solve minimum separation distances for every class and lobe"),
        ("eirp-table", "print the earth-station EIRP density table"),
    ):
        _add_shared_flags(sub.add_parser(name, help=help_text))
    return parser


def run_sweep_command(cfg: RunConfig) -> str:
    fmt = cfg.format or "csv"
    if fmt not in ("csv", "svg"):
        raise ConfigError(f"format: sweep emits csv or svg, got {cfg.format!r}")
    counts = cfg.counts if cfg.counts is not None else (cfg.count,)
    series = [
        (series_label(c), sweep(scenario_from_config(cfg, count=c), cfg.d_start, cfg.d_stop, cfg.step))
        for c in counts
    ]
    assumptions = sweep_assumptions(cfg)
    if fmt == "csv":
        return render_sweep_csv(series, assumptions)
    title = f"SINR vs distance: Class {cfg.es_class}, {cfg.lobe}"
    return render_sweep_svg(series, assumptions, title)


def run_separation_command(cfg: RunConfig) -> str:
    if cfg.format not in (None, "table"):
        raise ConfigError(f"format: separation emits table, got {cfg.format!r}")
    if cfg.counts is not None:
        raise ConfigError("counts: only supported by the sweep command")
    return render_separation_table(cfg, separation_assumptions(cfg))


def run_eirp_table_command(cfg: RunConfig) -> str:
    if cfg.format not in (None, "table"):
        raise ConfigError(f"format: eirp-table emits table, got {cfg.format!r}")
    return render_eirp_table()


_COMMANDS = {
    "sweep": run_sweep_command,
    "separation": run_separation_command,
    "eirp-table": run_eirp_table_command,
}


def _emit(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)

    file_text = None
    if args.config is not None:
        try:
            with open(args.config, "r", encoding="utf-8") as fh:
                file_text = fh.read()
        except OSError as exc:
            print(f"error: cannot read config: {exc}", file=sys.stderr)
            return EXIT_IO

    flags = {k: v for k, v in vars(args).items() if k not in ("command", "config")}
    try:
        cfg = parse_config(file_text, flags)
        text = _COMMANDS[args.command](cfg)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION

    try:
        _emit(text, cfg.out)
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
