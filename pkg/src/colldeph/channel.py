"""Bath decay/phase functions and the exact collective dephasing propagator.

The channel leaves populations fixed and multiplies each off-diagonal element
of the density matrix by

    F_mn(t) = exp(i (E_n - E_m) t) * exp(-(L_m - L_n)^2 Gamma(t))
                                   * exp(-i (L_m^2 - L_n^2) r(t)),

with r(t) = Delta(t) - Theta(t).  The bath is a thermal ensemble of bosonic
modes with spectral density J(w) = 4 J0 w exp(-w/w_c); Gamma, Delta and Theta
can be evaluated four ways:

* ``zero-t``      closed form at zero temperature,
                  Gamma = (J0/8) ln(1 + w_c^2 t^2);
* ``low-t``       closed form in the low-temperature regime w_c beta >> 1,
                  adding (J0/4) ln[sinh(pi t / beta) / (pi t / beta)];
* ``quadrature``  adaptive panel integration of the continuum integrals
                  (the finite-temperature part is integrated in the same
                  scaling limit the low-t closed form evaluates exactly);
* ``discrete``    direct sums over n_modes sampled bath oscillators, kept in
                  the literal finite-cutoff form.  This converges to the
                  continuum integrals and doubles as an independent check of
                  both closed forms (exact at T = 0; at finite temperature it
                  differs from ``low-t`` by the scaling-limit error, about
                  5e-4 relative at w_c beta = 60).

All four agree that Delta = arctan(w_c t) and Theta = w_c t.
"""

import math
import warnings
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .hilbert import DensityMatrix, LevelSystem

MODES = ("zero-t", "low-t", "quadrature", "discrete")

QUAD_ATOL = 1e-13
QUAD_CUT_MULTIPLE = 50.0  # integration window in units of 1/cutoff-scale
_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(8)


@dataclass(frozen=True)
class BathParams:
    """Spectral density, temperature and evaluation mode of the bath.

    ``beta`` is the inverse temperature with k_B = 1; ``math.inf`` encodes
    T = 0.  ``n_modes``/``omega_max`` only matter in ``discrete`` mode.
    """

    j0: float = 1.0
    omega_c: float = 1.0
    beta: float = math.inf
    mode: str = "zero-t"
    n_modes: int = 4000
    omega_max: float | None = None

    def __post_init__(self):
        if self.j0 <= 0:
            raise ValueError("j0 must be positive")
        if self.omega_c <= 0:
            raise ValueError("omega_c must be positive")
        if not self.beta > 0:
            raise ValueError("beta must be positive (math.inf for T = 0)")
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}; choose from {MODES}")
        if self.mode == "low-t" and math.isfinite(self.beta):
            product = self.omega_c * self.beta
            if product < 10.0:
                raise ValueError(
                    f"low-t closed form needs omega_c * beta >= 10, got {product:.3g}"
                )
            if product < 50.0:
                warnings.warn(
                    f"omega_c * beta = {product:.3g} is marginal for the low-t closed form",
                    stacklevel=2,
                )
        if self.mode == "discrete":
            if self.n_modes < 1:
                raise ValueError("n_modes must be >= 1")
            if self.omega_max is not None and self.omega_max <= 0:
                raise ValueError("omega_max must be positive")

    @classmethod
    def from_temperature_ratio(cls, ratio, j0=1.0, omega_c=1.0, mode=None, **kw):
        """Build parameters from T / T_c with T_c = omega_c.

        ratio = 0 encodes T = 0.  When ``mode`` is omitted it defaults to the
        closed form matching the temperature.
        """
        if ratio < 0:
            raise ValueError("temperature ratio must be >= 0")
        beta = math.inf if ratio == 0 else 1.0 / (ratio * omega_c)
        if mode is None:
            mode = "zero-t" if ratio == 0 else "low-t"
        return cls(j0=j0, omega_c=omega_c, beta=beta, mode=mode, **kw)

    @property
    def temperature_ratio(self):
        if math.isinf(self.beta):
            return 0.0
        return 1.0 / (self.beta * self.omega_c)

    def resolved_omega_max(self):
        return 40.0 * self.omega_c if self.omega_max is None else self.omega_max


@dataclass(frozen=True)
class BathFunctions:
    """Values of Gamma, Delta, Theta at one time; r = Delta - Theta."""

    gamma: float
    delta: float
    theta: float

    @property
    def r(self):
        return self.delta - self.theta


def _lnsinhc(x):
    """ln(sinh(x)/x), stable from x = 0 through the sinh overflow range."""
    x = np.asarray(x, dtype=float)
    out = np.empty_like(x)
    tiny = x < 1e-4
    big = x >= 20.0
    mid = ~(tiny | big)
    xt = x[tiny]
    out[tiny] = xt * xt / 6.0 - xt**4 / 180.0
    xm = x[mid]
    out[mid] = np.log(np.sinh(xm) / xm)
    xb = x[big]
    # exact rewrite; the log1p term underflows to 0 deep in the tail, where
    # the asymptote x - ln(2x) is the correct limit
    out[big] = xb - np.log(2.0 * xb) + np.log1p(-np.exp(-2.0 * xb))
    return out


def _adaptive_panels(kind, t, par, hi, tol=QUAD_ATOL):
    """Panel-doubling composite Gauss quadrature of one integrand on (0, hi]."""
    if t == 0.0:
        return 0.0
    n = max(64, int(math.ceil(8.0 * hi * t / (2.0 * math.pi))))
    prev = _kernels.gl_panel_sum(kind, t, par, 0.0, hi, n, _GL_NODES, _GL_WEIGHTS)
    for _ in range(12):
        n *= 2
        cur = _kernels.gl_panel_sum(kind, t, par, 0.0, hi, n, _GL_NODES, _GL_WEIGHTS)
        if abs(cur - prev) <= tol:
            return cur
        prev = cur
    raise ArithmeticError(f"quadrature did not converge (kind={kind}, t={t})")


def _closed_form_grids(params, ts, thermal):
    x = params.omega_c * ts
    gam = params.j0 / 8.0 * np.log1p(x * x)
    if thermal:
        gam = gam + params.j0 / 4.0 * _lnsinhc(np.pi * ts / params.beta)
    delta = np.arctan(x)
    return gam, delta, x


def _quadrature_grids(params, ts):
    wc, beta = params.omega_c, params.beta
    gam = np.empty(ts.size)
    delta = np.empty(ts.size)
    hi = QUAD_CUT_MULTIPLE * wc
    for i, t in enumerate(ts):
        g = params.j0 / 2.0 * _adaptive_panels(_kernels.KIND_GAMMA_CUT, t, wc, hi)
        if math.isfinite(beta) and t > 0.0:
            hi_th = QUAD_CUT_MULTIPLE / beta
            g += params.j0 / 2.0 * _adaptive_panels(
                _kernels.KIND_GAMMA_THERMAL, t, beta, hi_th
            )
        gam[i] = g
        delta[i] = _adaptive_panels(_kernels.KIND_DELTA, t, wc, hi)
    return gam, delta, wc * ts


def _discrete_grids(params, ts):
    omega_max = params.resolved_omega_max()
    dw = omega_max / params.n_modes
    omegas = (np.arange(params.n_modes) + 0.5) * dw
    weights = 4.0 * params.j0 * omegas * np.exp(-omegas / params.omega_c) * dw
    raw = _kernels.discrete_bath_sums(omegas, weights, params.beta, np.asarray(ts, float))
    # rescale the raw mode sums onto the continuum normalization used above
    gam = raw[:, 0] / 16.0
    delta = raw[:, 1] / (4.0 * params.j0)
    theta = raw[:, 2] / (4.0 * params.j0)
    return gam, delta, theta


def bath_function_grids(params, ts):
    """(Gamma, Delta, Theta) arrays over an array of times."""
    ts = np.asarray(ts, dtype=float)
    if np.any(ts < 0):
        raise ValueError("times must be >= 0")
    if params.mode == "zero-t":
        return _closed_form_grids(params, ts, thermal=False)
    if params.mode == "low-t":
        thermal = math.isfinite(params.beta)
        return _closed_form_grids(params, ts, thermal=thermal)
    if params.mode == "quadrature":
        return _quadrature_grids(params, ts)
    return _discrete_grids(params, ts)


def bath_functions(params, t):
    """Evaluate Gamma(t), Delta(t), Theta(t) for one time."""
    if t < 0:
        raise ValueError("t must be >= 0")
    gam, delta, theta = bath_function_grids(params, np.array([float(t)]))
    return BathFunctions(float(gam[0]), float(delta[0]), float(theta[0]))


@dataclass(frozen=True)
class DephasingFactors:
    """Entrywise factors F applied to rho(0) at time t."""

    system: LevelSystem
    t: float
    F: np.ndarray


def factor_grid(system, params, ts):
    """Stack of dephasing-factor matrices over an array of times."""
    ts = np.asarray(ts, dtype=float)
    gam, delta, theta = bath_function_grids(params, ts)
    rs = delta - theta
    return _kernels.phase_factor_grid(
        np.asarray(system.L, float), np.asarray(system.E, float), gam, rs, ts
    )


def dephasing_factors(system, params, t):
    """Factor matrix F(t) with F_nn = 1 and |F_mn| <= 1."""
    if t < 0:
        raise ValueError("t must be >= 0")
    F = factor_grid(system, params, np.array([float(t)]))[0]
    return DephasingFactors(system=system, t=float(t), F=F)


def evolve_matrix_grid(rho0_matrix, system, params, ts):
    """Entrywise-evolved copies of rho0 over a time grid (no revalidation)."""
    F = factor_grid(system, params, ts)
    return rho0_matrix[None, :, :] * F


def evolve(rho0, params, t):
    """Apply the channel to a DensityMatrix for a time t >= 0."""
    out = evolve_matrix_grid(rho0.matrix, rho0.system, params, np.array([float(t)]))[0]
    return DensityMatrix(rho0.system, out)
