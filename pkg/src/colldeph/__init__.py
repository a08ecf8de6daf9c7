"""Collective pure-dephasing dynamics for small fermionic and qubit systems."""

from .analysis import (Event, RegimeReport, TimeSeries, classify, detect_events,
                       dfs_projector, full_report, saturation_entropy,
                       time_series)
from .channel import (BathFunctions, BathParams, DephasingFactors,
                      bath_functions, dephasing_factors, evolve)
from .hilbert import (DensityMatrix, FERMION, LevelSystem, QUBIT, StateVector,
                      dfs_state, make_system, named_state, pure_density,
                      slater_state)
from .measures import (FERMION_D, QUBIT_SIGMA_YY, SpinFlipConvention,
                       coherence, concurrence, convention_for, linear_entropy,
                       pure_concurrence, tilde)

__version__ = "0.1.0"

__all__ = [
    "BathFunctions", "BathParams", "DensityMatrix", "DephasingFactors",
    "Event", "FERMION", "FERMION_D", "LevelSystem", "QUBIT",
    "QUBIT_SIGMA_YY", "RegimeReport", "SpinFlipConvention", "StateVector",
    "TimeSeries", "bath_functions", "classify", "coherence", "concurrence",
    "convention_for", "dephasing_factors", "detect_events", "dfs_projector",
    "dfs_state", "evolve", "full_report", "linear_entropy", "make_system",
    "named_state", "pure_concurrence", "pure_density", "saturation_entropy",
    "slater_state", "tilde", "time_series",
]
