"""Run configuration: defaults, flat key=value config files, flag merging.

Precedence is defaults < config file < command-line flags. Unknown keys and
out-of-range values are rejected with errors that name the offending key.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields
from typing import Optional

from .engine import EsEmitter, Scenario, VictimUe
from .linkbudget import CarrierSpec, EsClass, Lobe
from .units import PowerDbm, PowerRatioDb


class ConfigError(ValueError):
    """Invalid configuration; the message names the offending key."""


LOBES = ("mainlobe", "sidelobe")
FORMATS = ("csv", "svg", "table")


@dataclass
class RunConfig:
    """All knobs for one CLI run; every field has the model default."""

    es_class: int = 1  # config-file key "class"
    lobe: str = "mainlobe"
    count: int = 1
    counts: Optional[tuple[int, ...]] = None  # sweep only: one series per count
    rsrp: float = -80.0
    noise_figure: float = 0.0
    temperature: float = 290.0
    frequency: float = 28.0e9
    bandwidth: float = 1.0e9
    d_start: float = 1.0
    d_stop: float = 5000.0
    step: float = 1.0
    threshold: float = 0.0
    format: Optional[str] = None  # resolved per command when left unset
    out: Optional[str] = None  # None writes to stdout


# "class" is a reserved word in Python, so the field is es_class; every other
# config key matches its field name exactly.
_KEY_TO_FIELD = {"class": "es_class"}
_KEY_TO_FIELD.update(
    {f.name: f.name for f in fields(RunConfig) if f.name != "es_class"}
)

_INT_KEYS = {"class", "count"}
_FLOAT_KEYS = {
    "rsrp",
    "noise_figure",
    "temperature",
    "frequency",
    "bandwidth",
    "d_start",
    "d_stop",
    "step",
    "threshold",
}


def _coerce(key: str, raw: str):
    raw = raw.strip()
    if key in _INT_KEYS:
        try:
            return int(raw)
        except ValueError:
            raise ConfigError(f"{key}: expected an integer, got {raw!r}") from None
    if key in _FLOAT_KEYS:
        try:
            return float(raw)
        except ValueError:
            raise ConfigError(f"{key}: expected a number, got {raw!r}") from None
    if key == "counts":
        return parse_counts(raw)
    if key in ("lobe", "format"):
        return raw.lower()
    return raw  # "out": free-form path


def parse_counts(raw: str) -> tuple[int, ...]:
    """Parse a comma-separated count list like "1,5,10"."""
    parts = [p.strip() for p in raw.split(",") if p.strip()]
    if not parts:
        raise ConfigError("counts: expected a comma-separated list of integers")
    try:
        counts = tuple(int(p) for p in parts)
    except ValueError:
        raise ConfigError(f"counts: expected integers, got {raw!r}") from None
    if any(c < 1 for c in counts):
        raise ConfigError("counts: every entry must be >= 1")
    if len(set(counts)) != len(counts):
        raise ConfigError("counts: duplicate entries")
    return counts


def parse_config_text(text: str) -> dict:
    """Parse flat "key = value" lines; '#' starts a comment anywhere."""
    values = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {line!r}")
        key, raw = (part.strip() for part in line.split("=", 1))
        if key not in _KEY_TO_FIELD:
            raise ConfigError(f"unknown config key: {key!r}")
        values[_KEY_TO_FIELD[key]] = _coerce(key, raw)
    return values


def validate(cfg: RunConfig) -> RunConfig:
    """Range-check every field; raises ConfigError naming the bad key."""
    if cfg.es_class not in (1, 2, 3):
        raise ConfigError(f"class: must be 1, 2, or 3, got {cfg.es_class!r}")
    if cfg.lobe not in LOBES:
        raise ConfigError(f"lobe: must be one of {LOBES}, got {cfg.lobe!r}")
    if not isinstance(cfg.count, int) or cfg.count < 1:
        raise ConfigError(f"count: must be an integer >= 1, got {cfg.count!r}")
    if cfg.counts is not None and any(c < 1 for c in cfg.counts):
        raise ConfigError("counts: every entry must be >= 1")
    for key in ("rsrp", "noise_figure", "threshold"):
        if not math.isfinite(getattr(cfg, key)):
            raise ConfigError(f"{key}: must be finite")
    if not (math.isfinite(cfg.temperature) and cfg.temperature > 0.0):
        raise ConfigError(f"temperature: must be > 0, got {cfg.temperature!r}")
    if not (math.isfinite(cfg.frequency) and cfg.frequency > 0.0):
        raise ConfigError(f"frequency: must be > 0, got {cfg.frequency!r}")
    if not (math.isfinite(cfg.bandwidth) and cfg.bandwidth > 0.0):
        raise ConfigError(f"bandwidth: must be > 0, got {cfg.bandwidth!r}")
    if not (math.isfinite(cfg.step) and cfg.step > 0.0):
        raise ConfigError(f"step: must be > 0, got {cfg.step!r}")
    if not (math.isfinite(cfg.d_start) and cfg.d_start > 0.0):
        raise ConfigError(f"d_start: must be > 0, got {cfg.d_start!r}")
    if not (math.isfinite(cfg.d_stop) and cfg.d_stop > cfg.d_start):
        raise ConfigError(f"d_stop: must be > d_start, got {cfg.d_stop!r}")
    if cfg.format is not None and cfg.format not in FORMATS:
        raise ConfigError(f"format: must be one of {FORMATS}, got {cfg.format!r}")
    return cfg


def parse_config(text: Optional[str], flags: Optional[dict] = None) -> RunConfig:
    """Merge defaults, config-file text, and flag overrides into a RunConfig.

    `flags` maps field names to already-typed values; None entries are
    treated as unset. Flags win over file values, which win over defaults.
    """
    merged = {}
    if text is not None:
        merged.update(parse_config_text(text))
    for name, value in (flags or {}).items():
        if value is None:
            continue
        if name not in _KEY_TO_FIELD.values():
            raise ConfigError(f"unknown config field: {name!r}")
        merged[name] = value
    return validate(RunConfig(**merged))


def scenario_from_config(cfg: RunConfig, count: Optional[int] = None) -> Scenario:
    """Build an engine Scenario, optionally overriding the transmitter count."""
    emitter = EsEmitter(
        es_class=EsClass(cfg.es_class),
        lobe=Lobe(cfg.lobe),
        count=cfg.count if count is None else count,
    )
    victim = VictimUe(
        rsrp=PowerDbm(cfg.rsrp),
        noise_temperature_k=cfg.temperature,
        noise_figure=PowerRatioDb(cfg.noise_figure),
    )
    carrier = CarrierSpec(frequency_hz=cfg.frequency, bandwidth_hz=cfg.bandwidth)
    return Scenario(emitter=emitter, victim=victim, carrier=carrier)
