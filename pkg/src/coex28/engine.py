"""Scenario evaluation: interference aggregation, SINR vs distance, separation solving.

Everything here is a pure function over immutable value objects, so sweeps
can be evaluated from any number of workers without synchronization.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .linkbudget import (
    CarrierSpec,
    EsClass,
    Lobe,
    es_eirp_dbm,
    fspl_db,
    fspl_inverse_distance_m,
    thermal_noise_dbm,
)
from .units import PowerDbm, PowerMilliwatt, PowerRatioDb, apply_loss, dbm_to_mw, mw_to_dbm

# Bracket and stopping rule for the bisection cross-check solver. The closed
# form is the primary path; bisection exists to validate it independently.
BISECT_LO_M = 1e-3
BISECT_HI_M = 1e7
BISECT_MAX_ITER = 200
BISECT_WIDTH_M = 1e-3


@dataclass(frozen=True)
class VictimUe:
    """5G user-equipment receiver: desired-signal level and noise parameters."""

    rsrp: PowerDbm = PowerDbm(-80.0)
    noise_temperature_k: float = 290.0
    noise_figure: PowerRatioDb = PowerRatioDb(0.0)

    def __post_init__(self):
        if self.noise_temperature_k <= 0.0:
            raise ValueError("noise_temperature_k must be > 0")


@dataclass(frozen=True)
class EsEmitter:
    """Group of identical earth-station transmitters, all equidistant from the victim."""

    es_class: EsClass
    lobe: Lobe
    count: int = 1

    def __post_init__(self):
        if not isinstance(self.count, int) or self.count < 1:
            raise ValueError(f"count must be an integer >= 1, got {self.count!r}")


@dataclass(frozen=True)
class Scenario:
    """One victim, one emitter group, one carrier.

    Fully determines SINR as a function of a single scalar distance.
    """

    emitter: EsEmitter
    victim: VictimUe = VictimUe()
    carrier: CarrierSpec = CarrierSpec()


@dataclass(frozen=True)
class SweepSeries:
    """Ordered (distance_m, sinr) samples for one scenario.

    Distances are strictly increasing; with free-space-only interference the
    SINR values increase strictly along the series as well.
    """

    scenario: Scenario
    samples: tuple[tuple[float, PowerRatioDb], ...]


@dataclass(frozen=True)
class SeparationResult:
    """Minimum distance at which SINR reaches the threshold.

    distance_m is +inf when attainable is False: no finite separation
    suffices because the interference-free ceiling already sits at or below
    the threshold.
    """

    distance_m: float
    threshold: PowerRatioDb
    attainable: bool


def noise_dbm(scenario: Scenario) -> PowerDbm:
    """Noise floor at the victim: thermal over bandwidth plus noise figure."""
    return thermal_noise_dbm(
        scenario.carrier,
        scenario.victim.noise_temperature_k,
        scenario.victim.noise_figure,
    )


def aggregation_gain_db(count: int) -> PowerRatioDb:
    """Linear power sum of `count` equal contributions, as a dB offset."""
    return PowerRatioDb(10.0 * math.log10(count))


def eirp_total_dbm(scenario: Scenario) -> PowerDbm:
    """Aggregate EIRP of the emitter group over the victim bandwidth."""
    per_tx = es_eirp_dbm(scenario.emitter.es_class, scenario.emitter.lobe, scenario.carrier)
    return per_tx + aggregation_gain_db(scenario.emitter.count)


def interference_dbm(scenario: Scenario, distance_m: float) -> PowerDbm:
    """Received interference aggregated over all equidistant transmitters.

    Per-transmitter received power is EIRP minus free-space loss; equal
    contributions sum linearly, i.e. +10*log10(count).
    """
    per_tx = es_eirp_dbm(scenario.emitter.es_class, scenario.emitter.lobe, scenario.carrier)
    received = apply_loss(per_tx, fspl_db(distance_m, scenario.carrier.frequency_hz))
    return received + aggregation_gain_db(scenario.emitter.count)


def sinr_db(scenario: Scenario, distance_m: float) -> PowerRatioDb:
    """SINR at the victim, with interference and noise summed in linear power."""
    interference = dbm_to_mw(interference_dbm(scenario, distance_m))
    noise = dbm_to_mw(noise_dbm(scenario))
    return scenario.victim.rsrp - mw_to_dbm(interference + noise)


def snr_ceiling_db(scenario: Scenario) -> PowerRatioDb:
    """Interference-free SINR limit, approached monotonically as distance grows."""
    return scenario.victim.rsrp - noise_dbm(scenario)


def sweep(scenario: Scenario, d_start_m: float, d_stop_m: float, step_m: float) -> SweepSeries:
    """Evaluate SINR on the grid d_start, d_start+step, ...

    The stop distance is appended as a final sample when the step grid does
    not land on it exactly.
    """
    if not (0.0 < d_start_m < d_stop_m):
        raise ValueError("require 0 < d_start_m < d_stop_m")
    if step_m <= 0.0:
        raise ValueError("step_m must be > 0")
    n = int(math.floor((d_stop_m - d_start_m) / step_m + 1e-9))
    distances = [d_start_m + i * step_m for i in range(n + 1)]
    if d_stop_m - distances[-1] > 1e-9 * step_m:
        distances.append(d_stop_m)
    samples = tuple((d, sinr_db(scenario, d)) for d in distances)
    return SweepSeries(scenario=scenario, samples=samples)


def separation_distance(scenario: Scenario, threshold: PowerRatioDb) -> SeparationResult:
    """Closed-form minimum separation where SINR reaches `threshold`.

    Inverts the budget: the largest tolerable interference power is
    rsrp/threshold - noise in linear milliwatts. When that is not positive
    the threshold exceeds the interference-free ceiling and no distance
    suffices. Otherwise the distance follows from inverting free-space loss
    against the aggregate EIRP.
    """
    rsrp_mw = dbm_to_mw(scenario.victim.rsrp)
    noise_mw = dbm_to_mw(noise_dbm(scenario))
    i_max_mw = rsrp_mw.value / 10.0 ** (threshold.value / 10.0) - noise_mw.value
    if i_max_mw <= 0.0:
        return SeparationResult(math.inf, threshold, False)
    required_loss = eirp_total_dbm(scenario) - mw_to_dbm(PowerMilliwatt(i_max_mw))
    distance = fspl_inverse_distance_m(required_loss, scenario.carrier.frequency_hz)
    return SeparationResult(distance, threshold, True)


def separation_distance_bisect(scenario: Scenario, threshold: PowerRatioDb) -> SeparationResult:
    """Bisection on sinr_db over [BISECT_LO_M, BISECT_HI_M].

    Independent cross-check for separation_distance: it never consults the
    closed form, only the sign of sinr - threshold. Returns the upper end of
    the final bracket, so the reported distance satisfies the threshold.
    """
    target = threshold.value

    def shortfall(d: float) -> float:
        return sinr_db(scenario, d).value - target

    lo, hi = BISECT_LO_M, BISECT_HI_M
    if shortfall(hi) < 0.0:
        return SeparationResult(math.inf, threshold, False)
    if shortfall(lo) >= 0.0:
        return SeparationResult(lo, threshold, True)
    for _ in range(BISECT_MAX_ITER):
        if hi - lo <= BISECT_WIDTH_M:
            break
        mid = 0.5 * (lo + hi)
        if shortfall(mid) >= 0.0:
            hi = mid
        else:
            lo = mid
    return SeparationResult(hi, threshold, True)
