"""Timing comparison of the numba kernels against their numpy twins.

Run as:  python benchmarks/bench_kernels.py
"""

import time

import numpy as np

from colldeph import _kernels as K


def _time(fn, *args, repeat=5):
    fn(*args)  # warm up (also triggers jit compilation)
    best = np.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    if not K.HAVE_NUMBA:
        print("numba path unavailable (COLLDEPH_NO_NUMBA set or numba missing); "
              "timing the numpy twins only")

    n_modes, omega_max = 4000, 40.0
    dw = omega_max / n_modes
    omegas = (np.arange(n_modes) + 0.5) * dw
    weights = 4.0 * omegas * np.exp(-omegas) * dw
    ts = np.linspace(0.0, 10.0, 2000)

    nodes, wts = np.polynomial.legendre.leggauss(8)
    L = np.array([2.0, 1.0, 0.0, -1.0, -2.0, 0.0])
    E = np.zeros(6)
    gam = 0.125 * np.log1p(ts * ts)
    rs = np.arctan(ts) - ts

    cases = [
        ("discrete_bath_sums (4000 modes x 2000 times)",
         K._discrete_bath_sums_np, (omegas, weights, 60.0, ts),
         getattr(K, "_discrete_bath_sums_nb", None)),
        ("gl_panel_sum (1024 panels x 8 nodes)",
         K._gl_panel_sum_np, (K.KIND_GAMMA_CUT, 10.0, 1.0, 0.0, 50.0, 1024, nodes, wts),
         getattr(K, "_gl_panel_sum_nb", None)),
        ("phase_factor_grid (2000 times, dim 6)",
         K._phase_factor_grid_np, (L, E, gam, rs, ts),
         getattr(K, "_phase_factor_grid_nb", None)),
    ]
    for name, np_fn, args, nb_fn in cases:
        t_np = _time(np_fn, *args)
        line = f"{name}: numpy {t_np * 1e3:8.2f} ms"
        if nb_fn is not None:
            t_nb = _time(nb_fn, *args)
            line += f" | numba {t_nb * 1e3:8.2f} ms | speedup x{t_np / t_nb:.2f}"
        print(line)


if __name__ == "__main__":
    main()
