"""Unit-safe power algebra for link-budget arithmetic.

Absolute power (dBm), relative gain/loss (dB), and linear power (mW) are
distinct types so that the classic link-budget bug (adding two absolute
levels, or mixing dB with dBm) fails with a TypeError instead of silently
producing a wrong number. All arithmetic is plain double precision; the
model is closed-form, so there is no clamping anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True, order=True)
class PowerDbm:
    """Absolute power in dBm (decibels relative to 1 milliwatt)."""

    value: float

    def __post_init__(self):
        if not math.isfinite(self.value):
            raise ValueError(f"PowerDbm must be finite, got {self.value!r}")

    def __add__(self, other):
        # level + gain is a level; level + level is deliberately not expressible
        if isinstance(other, PowerRatioDb):
            return PowerDbm(self.value + other.value)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, PowerRatioDb):
            return PowerDbm(self.value - other.value)
        if isinstance(other, PowerDbm):
            return PowerRatioDb(self.value - other.value)
        return NotImplemented


@dataclass(frozen=True, order=True)
class PowerRatioDb:
    """Relative power ratio in dB: a gain (positive) or loss, never absolute."""

    value: float

    def __post_init__(self):
        if not math.isfinite(self.value):
            raise ValueError(f"PowerRatioDb must be finite, got {self.value!r}")

    def __add__(self, other):
        if isinstance(other, PowerRatioDb):
            return PowerRatioDb(self.value + other.value)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, PowerRatioDb):
            return PowerRatioDb(self.value - other.value)
        return NotImplemented

    def __neg__(self):
        return PowerRatioDb(-self.value)


@dataclass(frozen=True, order=True)
class PowerMilliwatt:
    """Linear power in milliwatts; zero is allowed and means absent power."""

    value: float

    def __post_init__(self):
        if not math.isfinite(self.value) or self.value < 0.0:
            raise ValueError(f"PowerMilliwatt must be finite and >= 0, got {self.value!r}")

    def __add__(self, other):
        if isinstance(other, PowerMilliwatt):
            return PowerMilliwatt(self.value + other.value)
        return NotImplemented


def dbm_to_mw(p: PowerDbm) -> PowerMilliwatt:
    """Convert an absolute level to linear milliwatts: 10^(p/10)."""
    return PowerMilliwatt(10.0 ** (p.value / 10.0))


def mw_to_dbm(p: PowerMilliwatt) -> PowerDbm:
    """Convert linear milliwatts to dBm: 10*log10(p).

    Raises ValueError for zero power, which has no logarithmic
    representation.
    """
    if p.value <= 0.0:
        raise ValueError("no logarithmic representation for zero power")
    return PowerDbm(10.0 * math.log10(p.value))


def apply_loss(p: PowerDbm, loss: PowerRatioDb) -> PowerDbm:
    """Attenuate a level: positive dB reduces power, negative dB is gain."""
    return PowerDbm(p.value - loss.value)
