"""Regime classification, time series generation and event detection.

Times are reported dimensionless as omega_c * t throughout (time in units of
the inverse bath cutoff), which is also the CLI's CSV time column.
"""

import numpy as np
from dataclasses import dataclass, field

from . import channel, measures
from .hilbert import pure_density

REGIME_INVARIANT = "invariant"
REGIME_ORTHOGONAL = "orthogonal"
REGIME_PARTIAL = "partial"

EPS_DEAD = 1e-12
DEFAULT_SCAN = 2000
DEFAULT_T_MAX = 10.0


@dataclass(frozen=True)
class TimeSeries:
    """Sampled concurrence / coherence / linear entropy records."""

    times: np.ndarray
    concurrence: np.ndarray
    coherence: np.ndarray
    linear_entropy: np.ndarray


@dataclass(frozen=True)
class Event:
    kind: str  # "death" or "birth"
    time: float  # dimensionless omega_c * t


@dataclass(frozen=True)
class RegimeReport:
    dfs_overlap: float
    regime: str
    events: tuple = field(default_factory=tuple)


def dfs_projector(system):
    """Diagonal 0/1 projector onto the basis states with L_n = 0."""
    p = np.zeros((system.dim, system.dim))
    for i in system.dfs_indices():
        p[i, i] = 1.0
    return p


def classify(psi):
    """Regime of an initial pure state from its overlap with the DFS."""
    idx = list(psi.system.dfs_indices())
    overlap = float(np.sum(np.abs(psi.amplitudes[idx]) ** 2))
    if overlap >= 1.0 - 1e-12:
        regime = REGIME_INVARIANT
    elif overlap <= 1e-12:
        regime = REGIME_ORTHOGONAL
    else:
        regime = REGIME_PARTIAL
    return RegimeReport(dfs_overlap=overlap, regime=regime)


def _raw_times(system, params, t_max, n_steps):
    # sample in raw time, report omega_c * t
    return np.linspace(0.0, float(t_max), int(n_steps))


def time_series(psi0, params, t_max=DEFAULT_T_MAX, n_steps=DEFAULT_SCAN):
    """Evolve psi0 and sample concurrence, coherence and linear entropy."""
    if n_steps < 2:
        raise ValueError("n_steps must be >= 2")
    if t_max <= 0:
        raise ValueError("t_max must be positive")
    system = psi0.system
    conv = measures.convention_for(system)
    rho0 = pure_density(psi0).matrix
    ts = _raw_times(system, params, t_max, n_steps)
    rhos = channel.evolve_matrix_grid(rho0, system, params, ts)
    conc = np.empty(ts.size)
    coh = np.empty(ts.size)
    ent = np.empty(ts.size)
    for i in range(ts.size):
        conc[i] = measures.concurrence_matrix(rhos[i], conv)
        coh[i] = measures.coherence(rhos[i])
        ent[i] = measures.linear_entropy(rhos[i])
    return TimeSeries(times=params.omega_c * ts, concurrence=conc,
                      coherence=coh, linear_entropy=ent)


def _concurrence_at(rho0, system, conv, params, t):
    rho = channel.evolve_matrix_grid(rho0, system, params, np.array([t]))[0]
    return measures.concurrence_matrix(rho, conv)


def detect_events(psi0, params, t_max=DEFAULT_T_MAX, n_scan=DEFAULT_SCAN,
                  eps_dead=EPS_DEAD):
    """Scan for concurrence deaths and births on [0, t_max].

    The concurrence is sampled on a uniform grid; every change between the
    alive (C > eps_dead) and dead states is refined by bisection.  Down
    crossings are deaths, up crossings births.  Flat-zero stretches between
    a death and the following birth count as a single dead interval.
    """
    if t_max <= 0:
        raise ValueError("t_max must be positive")
    n_scan = max(int(n_scan), 2)
    system = psi0.system
    conv = measures.convention_for(system)
    rho0 = pure_density(psi0).matrix
    ts = _raw_times(system, params, t_max, n_scan)
    rhos = channel.evolve_matrix_grid(rho0, system, params, ts)
    cs = np.array([measures.concurrence_matrix(rhos[i], conv) for i in range(ts.size)])

    tol = 1e-8 * float(t_max)
    events = []
    alive = cs[0] > eps_dead
    for i in range(1, ts.size):
        now = cs[i] > eps_dead
        if now == alive:
            continue
        lo, hi = ts[i - 1], ts[i]
        lo_alive = alive
        while hi - lo > tol:
            mid = 0.5 * (lo + hi)
            if (_concurrence_at(rho0, system, conv, params, mid) > eps_dead) == lo_alive:
                lo = mid
            else:
                hi = mid
        events.append(Event(kind="birth" if now else "death",
                            time=params.omega_c * 0.5 * (lo + hi)))
        alive = now
    return events


def saturation_entropy(psi0):
    """Long-time linear entropy: only entries with L_m = L_n survive."""
    rho0 = pure_density(psi0).matrix
    L = psi0.system.L
    same = L[:, None] == L[None, :]
    return float(1.0 - np.sum(np.abs(rho0[same]) ** 2))


def full_report(psi0, params, t_max=DEFAULT_T_MAX, n_scan=DEFAULT_SCAN):
    """Classification plus detected events over the given horizon."""
    base = classify(psi0)
    events = detect_events(psi0, params, t_max=t_max, n_scan=n_scan)
    return RegimeReport(dfs_overlap=base.dfs_overlap, regime=base.regime,
                        events=tuple(events))
