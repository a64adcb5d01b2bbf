"""Shared test helpers: independent oracle formulas and scenario sampling.

The oracle functions re-derive every quantity from first principles using
different algebraic routes than the library (the 32.45-offset identity for
path loss, the density route for noise, km-based loss inversion), so tests
never compare the implementation against itself.
"""

from __future__ import annotations

import math
import random

from coex28 import (
    CarrierSpec,
    EsClass,
    EsEmitter,
    Lobe,
    PowerDbm,
    PowerRatioDb,
    Scenario,
    VictimUe,
    snr_ceiling_db,
)

_C = 299_792_458.0
_K = 1.380649e-23

# free-space loss at 1 km / 1 MHz, the classic ~32.45 dB link-budget offset
FSPL_OFFSET_DB = 20.0 * math.log10(4.0 * math.pi * 1.0e9 / _C)

MAIN_EIRP_DBM_PER_GHZ = {1: 42.2, 2: 54.1, 3: 78.0}


def oracle_fspl_db(distance_m: float, frequency_hz: float) -> float:
    return FSPL_OFFSET_DB + 20.0 * math.log10((distance_m / 1000.0) * (frequency_hz / 1.0e6))


def oracle_noise_dbm(bandwidth_hz: float = 1.0e9, temperature_k: float = 290.0,
                     nf_db: float = 0.0) -> float:
    density_dbm_per_hz = 10.0 * math.log10(_K * temperature_k * 1000.0)
    return density_dbm_per_hz + 10.0 * math.log10(bandwidth_hz) + nf_db


def oracle_eirp_total_dbm(class_num: int, sidelobe: bool, count: int,
                          bandwidth_hz: float = 1.0e9) -> float:
    density = MAIN_EIRP_DBM_PER_GHZ[class_num] - (30.0 if sidelobe else 0.0)
    return density + 10.0 * math.log10(bandwidth_hz / 1.0e9) + 10.0 * math.log10(count)


def oracle_sinr_db(distance_m: float, class_num: int = 1, sidelobe: bool = False,
                   count: int = 1, rsrp_dbm: float = -80.0, nf_db: float = 0.0,
                   temperature_k: float = 290.0, frequency_hz: float = 28.0e9,
                   bandwidth_hz: float = 1.0e9) -> float:
    eirp = oracle_eirp_total_dbm(class_num, sidelobe, count, bandwidth_hz)
    i_mw = 10.0 ** ((eirp - oracle_fspl_db(distance_m, frequency_hz)) / 10.0)
    n_mw = 10.0 ** (oracle_noise_dbm(bandwidth_hz, temperature_k, nf_db) / 10.0)
    return rsrp_dbm - 10.0 * math.log10(i_mw + n_mw)


def oracle_separation_m(class_num: int, sidelobe: bool = False, count: int = 1,
                        threshold_db: float = 0.0, rsrp_dbm: float = -80.0,
                        nf_db: float = 0.0, temperature_k: float = 290.0,
                        frequency_hz: float = 28.0e9, bandwidth_hz: float = 1.0e9) -> float:
    """Hand inversion of the budget; +inf when the threshold is out of reach."""
    noise = oracle_noise_dbm(bandwidth_hz, temperature_k, nf_db)
    i_max_mw = 10.0 ** (rsrp_dbm / 10.0) / 10.0 ** (threshold_db / 10.0) - 10.0 ** (noise / 10.0)
    if i_max_mw <= 0.0:
        return math.inf
    required_db = oracle_eirp_total_dbm(class_num, sidelobe, count, bandwidth_hz)
    required_db -= 10.0 * math.log10(i_max_mw)
    km = 10.0 ** ((required_db - FSPL_OFFSET_DB - 20.0 * math.log10(frequency_hz / 1.0e6)) / 20.0)
    return 1000.0 * km


def random_scenario(rng: random.Random) -> Scenario:
    emitter = EsEmitter(
        es_class=rng.choice(list(EsClass)),
        lobe=rng.choice(list(Lobe)),
        count=rng.randint(1, 20),
    )
    victim = VictimUe(
        rsrp=PowerDbm(rng.uniform(-100.0, -60.0)),
        noise_temperature_k=rng.uniform(100.0, 400.0),
        noise_figure=PowerRatioDb(rng.uniform(0.0, 10.0)),
    )
    carrier = CarrierSpec(
        frequency_hz=rng.uniform(24.0e9, 40.0e9),
        bandwidth_hz=rng.uniform(0.2e9, 2.0e9),
    )
    return Scenario(emitter=emitter, victim=victim, carrier=carrier)


def attainable_threshold(rng: random.Random, scenario: Scenario,
                         margin_db: tuple[float, float] = (0.1, 25.0)) -> PowerRatioDb:
    """Threshold safely below the scenario's SINR ceiling."""
    ceiling = snr_ceiling_db(scenario).value
    return PowerRatioDb(ceiling - rng.uniform(*margin_db))


def unattainable_threshold(rng: random.Random, scenario: Scenario) -> PowerRatioDb:
    ceiling = snr_ceiling_db(scenario).value
    return PowerRatioDb(ceiling + rng.uniform(1e-3, 10.0))
