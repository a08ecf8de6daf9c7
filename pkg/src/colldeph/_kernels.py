"""Hot numeric kernels: numba-jitted loops with pure-numpy twins.

Set the environment variable ``COLLDEPH_NO_NUMBA=1`` to force the numpy
path (also taken automatically when numba is not importable).  Both paths
are kept importable so tests and benchmarks can compare them.
"""

import os

import numpy as np

_DISABLED = os.environ.get("COLLDEPH_NO_NUMBA", "").strip() not in ("", "0")

try:
    if _DISABLED:
        raise ImportError("numba disabled via COLLDEPH_NO_NUMBA")
    from numba import njit

    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False

# integrand selectors for gl_panel_sum
KIND_GAMMA_CUT = 0     # exp(-w/par) * sin(w t / 2)^2 / w
KIND_GAMMA_THERMAL = 1  # sin(w t / 2)^2 / w * 2 / (exp(par w) - 1)
KIND_DELTA = 2         # exp(-w/par) * sin(w t) / w


def _discrete_bath_sums_py(omegas, weights, beta, ts):
    # raw mode sums: G = 2 sum w_k/om^2 sin^2(om t/2) coth(beta om/2),
    # D = sum w_k/om^2 sin(om t), T = t sum w_k/om
    out = np.empty((ts.size, 3))
    for i in range(ts.size):
        t = ts[i]
        g = 0.0
        d = 0.0
        th = 0.0
        for k in range(omegas.size):
            om = omegas[k]
            x = weights[k] / (om * om)
            if beta == np.inf:
                coth = 1.0
            else:
                coth = 1.0 / np.tanh(0.5 * beta * om)
            s = np.sin(0.5 * om * t)
            g += 2.0 * x * s * s * coth
            d += x * np.sin(om * t)
            th += x * om * t
        out[i, 0] = g
        out[i, 1] = d
        out[i, 2] = th
    return out


def _discrete_bath_sums_np(omegas, weights, beta, ts):
    ts = np.asarray(ts, dtype=float)
    x = weights / omegas**2
    if beta == np.inf:
        coth = 1.0
    else:
        coth = 1.0 / np.tanh(0.5 * beta * omegas)
    out = np.empty((ts.size, 3))
    theta_rate = float(np.sum(x * omegas))
    # chunk the (nt, nk) outer product to bound memory
    step = 256
    for lo in range(0, ts.size, step):
        tt = ts[lo:lo + step, None]
        ph = omegas[None, :] * tt
        s = np.sin(0.5 * ph)
        out[lo:lo + step, 0] = 2.0 * np.sum(x * coth * s * s, axis=1)
        out[lo:lo + step, 1] = np.sum(x * np.sin(ph), axis=1)
    out[:, 2] = theta_rate * ts
    return out


def _gl_panel_sum_py(kind, t, par, lo, hi, n_panels, nodes, wts):
    h = (hi - lo) / n_panels
    total = 0.0
    for p in range(n_panels):
        a = lo + p * h
        for q in range(nodes.size):
            w = a + 0.5 * h * (nodes[q] + 1.0)
            if kind == 0:
                f = np.exp(-w / par) * np.sin(0.5 * w * t) ** 2 / w
            elif kind == 1:
                f = np.sin(0.5 * w * t) ** 2 / w * 2.0 / np.expm1(par * w)
            else:
                f = np.exp(-w / par) * np.sin(w * t) / w
            total += 0.5 * h * wts[q] * f
    return total


def _gl_panel_sum_np(kind, t, par, lo, hi, n_panels, nodes, wts):
    h = (hi - lo) / n_panels
    starts = lo + h * np.arange(n_panels)
    w = starts[:, None] + 0.5 * h * (nodes[None, :] + 1.0)
    if kind == 0:
        f = np.exp(-w / par) * np.sin(0.5 * w * t) ** 2 / w
    elif kind == 1:
        f = np.sin(0.5 * w * t) ** 2 / w * 2.0 / np.expm1(par * w)
    else:
        f = np.exp(-w / par) * np.sin(w * t) / w
    return float(np.sum(f * (0.5 * h * wts[None, :])))


def _phase_factor_grid_py(L, E, gammas, rs, ts):
    d = L.size
    out = np.empty((ts.size, d, d), dtype=np.complex128)
    for i in range(ts.size):
        for m in range(d):
            for n in range(d):
                dl = L[m] - L[n]
                dl2 = L[m] * L[m] - L[n] * L[n]
                ex = -dl * dl * gammas[i]
                ph = (E[n] - E[m]) * ts[i] - dl2 * rs[i]
                out[i, m, n] = np.exp(ex + 1j * ph)
    return out


def _phase_factor_grid_np(L, E, gammas, rs, ts):
    dl = L[:, None] - L[None, :]
    dl2 = L[:, None] ** 2 - L[None, :] ** 2
    de = E[None, :] - E[None, :].T
    ex = -(dl * dl)[None, :, :] * gammas[:, None, None]
    ph = de[None, :, :] * ts[:, None, None] - dl2[None, :, :] * rs[:, None, None]
    return np.exp(ex + 1j * ph)


if HAVE_NUMBA:
    _discrete_bath_sums_nb = njit(cache=True)(_discrete_bath_sums_py)
    _gl_panel_sum_nb = njit(cache=True)(_gl_panel_sum_py)
    _phase_factor_grid_nb = njit(cache=True)(_phase_factor_grid_py)

    discrete_bath_sums = _discrete_bath_sums_nb
    gl_panel_sum = _gl_panel_sum_nb
    phase_factor_grid = _phase_factor_grid_nb
else:
    discrete_bath_sums = _discrete_bath_sums_np
    gl_panel_sum = _gl_panel_sum_np
    phase_factor_grid = _phase_factor_grid_np
