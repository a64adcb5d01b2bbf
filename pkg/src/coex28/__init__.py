"""coex28: deterministic 28 GHz coexistence simulator.

Quantifies interference from fixed-satellite-service earth stations into a
5G user-equipment receiver under free-space line-of-sight propagation, and
solves for minimum separation distances at an SINR threshold.
"""

from .engine import (
    EsEmitter,
    Scenario,
    SeparationResult,
    SweepSeries,
    VictimUe,
    aggregation_gain_db,
    eirp_total_dbm,
    interference_dbm,
    noise_dbm,
    separation_distance,
    separation_distance_bisect,
    sinr_db,
    snr_ceiling_db,
    sweep,
)
from .linkbudget import (
    CarrierSpec,
    EsClass,
    Lobe,
    es_eirp_dbm,
    fspl_db,
    fspl_inverse_distance_m,
    thermal_noise_dbm,
)
from .units import (
    PowerDbm,
    PowerMilliwatt,
    PowerRatioDb,
    apply_loss,
    dbm_to_mw,
    mw_to_dbm,
)

__version__ = "0.1.0"

__all__ = [
    "CarrierSpec",
    "EsClass",
    "EsEmitter",
    "Lobe",
    "PowerDbm",
    "PowerMilliwatt",
    "PowerRatioDb",
    "Scenario",
    "SeparationResult",
    "SweepSeries",
    "VictimUe",
    "aggregation_gain_db",
    "apply_loss",
    "dbm_to_mw",
    "eirp_total_dbm",
    "es_eirp_dbm",
    "fspl_db",
    "fspl_inverse_distance_m",
    "interference_dbm",
    "mw_to_dbm",
    "noise_dbm",
    "separation_distance",
    "separation_distance_bisect",
    "sinr_db",
    "snr_ceiling_db",
    "sweep",
    "thermal_noise_dbm",
]
