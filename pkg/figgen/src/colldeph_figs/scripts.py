"""Console entry points render_fig1 .. render_fig5.

Each script takes the CSV paths written by the simulator's shipped configs,
in the documented positional order, plus ``-o/--out`` for the image path.
"""

import argparse
import sys

from .figspec import (Curve, FERMION_COLOR, FigureInputError, FigureSpec,
                      Panel, QUBIT_COLOR, render)

T_LABEL = "time (units of 1/omega_c)"


def _parse(argv, n_csv, usage):
    p = argparse.ArgumentParser(description=usage)
    p.add_argument("csv", nargs=n_csv, help="simulator CSV files, in order")
    p.add_argument("-o", "--out", required=True, help="output image path")
    return p.parse_args(argv)


def _run(spec):
    try:
        out = render(spec)
    except FigureInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"wrote {out}")
    return 0


def main_fig1(argv=None):
    args = _parse(argv, 2, "concurrence of the DFS family vs the weight alpha: "
                           "fermion sweep CSV, qubit sweep CSV")
    fsweep, qsweep = args.csv
    spec = FigureSpec(panels=(
        Panel(curves=(Curve(fsweep, "concurrence", color=FERMION_COLOR),),
              xlabel="alpha", ylabel="fermionic concurrence"),
        Panel(curves=(Curve(qsweep, "concurrence", color=QUBIT_COLOR),),
              xlabel="alpha", ylabel="qubit concurrence"),
    ), output=args.out)
    return _run(spec)


def _decay_figure(f_t0, f_low, q_t0, q_low, out, fermion_label, qubit_label):
    # 2x2: concurrence (left) and coherence (right), T = 0 on top and the
    # low-temperature run below; linear entropy inset on the T = 0 panel
    def pair(csv_f, csv_q, column):
        return (Curve(csv_f, column, fermion_label, FERMION_COLOR),
                Curve(csv_q, column, qubit_label, QUBIT_COLOR))

    spec_panels = (
        Panel(curves=pair(f_t0, q_t0, "concurrence"),
              xlabel=T_LABEL, ylabel="concurrence", title="T = 0",
              inset=pair(f_t0, q_t0, "linear_entropy"), inset_ylabel="S_L"),
        Panel(curves=pair(f_t0, q_t0, "coherence"),
              xlabel=T_LABEL, ylabel="coherence", title="T = 0"),
        Panel(curves=pair(f_low, q_low, "concurrence"),
              xlabel=T_LABEL, ylabel="concurrence", title="T = T_c/60"),
        Panel(curves=pair(f_low, q_low, "coherence"),
              xlabel=T_LABEL, ylabel="coherence", title="T = T_c/60"),
    )
    return FigureSpec(panels=spec_panels, output=out, nrows=2, ncols=2)


def main_fig2(argv=None):
    args = _parse(argv, 4, "decay of the DFS-orthogonal Bell-like pair: "
                           "f24 T=0, f24 low-T, q14 T=0, q14 low-T CSVs")
    return _run(_decay_figure(*args.csv, args.out, "fermions (f24)",
                              "qubits (q14)"))


def main_fig3(argv=None):
    args = _parse(argv, 4, "faster decay of the outer fermion superposition: "
                           "f15 T=0, f15 low-T, q14 T=0, q14 low-T CSVs")
    return _run(_decay_figure(*args.csv, args.out, "fermions (f15)",
                              "qubits (q14)"))


def main_fig4(argv=None):
    args = _parse(argv, 4, "partial DFS overlap, sudden death and birth: "
                           "f1234 T=0, f1234 low-T, q1234 T=0, q1234 low-T CSVs")
    return _run(_decay_figure(*args.csv, args.out, "fermions (f1234)",
                              "qubits (q1234)"))


def main_fig5(argv=None):
    args = _parse(argv, 2, "low-temperature comparison with the entangled "
                           "qubit start: f1234 low-T, q123_4 low-T CSVs")
    f_low, q_low = args.csv
    spec = FigureSpec(panels=(
        Panel(curves=(Curve(f_low, "concurrence", "fermions (f1234)", FERMION_COLOR),
                      Curve(q_low, "concurrence", "qubits (q123_4)", QUBIT_COLOR)),
              xlabel=T_LABEL, ylabel="concurrence", title="T = T_c/60"),
        Panel(curves=(Curve(f_low, "coherence", "fermions (f1234)", FERMION_COLOR),
                      Curve(q_low, "coherence", "qubits (q123_4)", QUBIT_COLOR)),
              xlabel=T_LABEL, ylabel="coherence", title="T = T_c/60"),
    ), output=args.out)
    return _run(spec)
