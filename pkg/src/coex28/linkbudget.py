"""Physical-layer building blocks: free-space loss, thermal noise, ES EIRP classes."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .units import PowerDbm, PowerRatioDb

SPEED_OF_LIGHT_M_S = 299_792_458.0
BOLTZMANN_J_PER_K = 1.380649e-23

DEFAULT_FREQUENCY_HZ = 28.0e9
DEFAULT_BANDWIDTH_HZ = 1.0e9
DEFAULT_TEMPERATURE_K = 290.0

_FOUR_PI = 4.0 * math.pi


class EsClass(Enum):
    """Earth-station transmitter class, ordered by mainlobe EIRP density."""

    CLASS_1 = 1
    CLASS_2 = 2
    CLASS_3 = 3


class Lobe(Enum):
    """Which antenna lobe points at the victim."""

    MAINLOBE = "mainlobe"
    SIDELOBE = "sidelobe"


# Mainlobe EIRP spectral density per class, dBm/GHz. The sidelobe is a fixed
# worst-case attenuation below the mainlobe, not a continuous pattern.
MAINLOBE_EIRP_DBM_PER_GHZ = {
    EsClass.CLASS_1: 42.2,
    EsClass.CLASS_2: 54.1,
    EsClass.CLASS_3: 78.0,
}
SIDELOBE_ATTENUATION_DB = 30.0


@dataclass(frozen=True)
class CarrierSpec:
    """Carrier frequency and the victim's operating bandwidth, both in Hz."""

    frequency_hz: float = DEFAULT_FREQUENCY_HZ
    bandwidth_hz: float = DEFAULT_BANDWIDTH_HZ

    def __post_init__(self):
        if not (math.isfinite(self.frequency_hz) and self.frequency_hz > 0.0):
            raise ValueError(f"frequency_hz must be > 0, got {self.frequency_hz!r}")
        if not (math.isfinite(self.bandwidth_hz) and self.bandwidth_hz > 0.0):
            raise ValueError(f"bandwidth_hz must be > 0, got {self.bandwidth_hz!r}")


def fspl_db(distance_m: float, frequency_hz: float) -> PowerRatioDb:
    """Free-space path loss 20*log10(4*pi*d*f/c) under line-of-sight.

    Strictly increasing in both arguments: +20 dB per decade of distance or
    frequency. Raises ValueError at or below zero, where the loss is
    undefined.
    """
    if distance_m <= 0.0:
        raise ValueError("FSPL undefined at or below zero distance")
    if frequency_hz <= 0.0:
        raise ValueError("FSPL undefined at or below zero frequency")
    ratio = _FOUR_PI * distance_m * frequency_hz / SPEED_OF_LIGHT_M_S
    return PowerRatioDb(20.0 * math.log10(ratio))


def fspl_inverse_distance_m(loss: PowerRatioDb, frequency_hz: float) -> float:
    """Distance whose free-space loss equals `loss`: d = c/(4*pi*f) * 10^(L/20)."""
    if frequency_hz <= 0.0:
        raise ValueError("FSPL undefined at or below zero frequency")
    return SPEED_OF_LIGHT_M_S / (_FOUR_PI * frequency_hz) * 10.0 ** (loss.value / 20.0)


def thermal_noise_dbm(
    carrier: CarrierSpec,
    temperature_k: float = DEFAULT_TEMPERATURE_K,
    noise_figure: PowerRatioDb = PowerRatioDb(0.0),
) -> PowerDbm:
    """Receiver noise floor: k*T*B over the carrier bandwidth, plus noise figure.

    k is the CODATA Boltzmann constant; at 290 K this is -173.98 dBm/Hz
    before the bandwidth and noise-figure terms.
    """
    if temperature_k <= 0.0:
        raise ValueError("temperature_k must be > 0")
    ktb_w = BOLTZMANN_J_PER_K * temperature_k * carrier.bandwidth_hz
    return PowerDbm(10.0 * math.log10(ktb_w / 1e-3) + noise_figure.value)


def eirp_density_dbm_per_ghz(es_class: EsClass, lobe: Lobe) -> float:
    """Tabulated EIRP spectral density (dBm/GHz) for one class/lobe cell."""
    density = MAINLOBE_EIRP_DBM_PER_GHZ[es_class]
    if lobe is Lobe.SIDELOBE:
        density -= SIDELOBE_ATTENUATION_DB
    return density


def es_eirp_dbm(es_class: EsClass, lobe: Lobe, carrier: CarrierSpec) -> PowerDbm:
    """Total in-band EIRP radiated into the victim bandwidth.

    The density is flat in dBm/GHz, so the total is
    density + 10*log10(bandwidth / 1 GHz); at the default 1 GHz bandwidth
    the tabulated density comes back unchanged.
    """
    density = eirp_density_dbm_per_ghz(es_class, lobe)
    return PowerDbm(density + 10.0 * math.log10(carrier.bandwidth_hz / 1.0e9))
