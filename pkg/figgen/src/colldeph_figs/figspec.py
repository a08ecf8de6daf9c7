"""Figure specifications over colldeph CSV files.

These renderers are pure CSV consumers: they never recompute any physics,
so the simulator stays the single source of numerical truth.  Every CSV is
validated against the exact header the simulator writes.
"""

from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

SERIES_HEADER = "t,concurrence,coherence,linear_entropy"
SWEEP_HEADER = "alpha,concurrence"

FERMION_COLOR = "tab:orange"
QUBIT_COLOR = "tab:purple"


class FigureInputError(Exception):
    """Missing file, wrong header or unknown column."""


def load_csv(path):
    """Read one simulator CSV; returns (column name -> array)."""
    path = Path(path)
    if not path.is_file():
        raise FigureInputError(f"missing CSV: {path}")
    with open(path) as fh:
        header = fh.readline().rstrip("\n")
    if header not in (SERIES_HEADER, SWEEP_HEADER):
        raise FigureInputError(f"{path}: unexpected header {header!r}")
    names = header.split(",")
    data = np.loadtxt(path, delimiter=",", skiprows=1)
    data = np.atleast_2d(data)
    return {name: data[:, i] for i, name in enumerate(names)}


@dataclass(frozen=True)
class Curve:
    csv: str
    column: str
    label: str = ""
    color: str = FERMION_COLOR
    linestyle: str = "-"


@dataclass(frozen=True)
class Panel:
    curves: tuple
    xlabel: str
    ylabel: str
    title: str = ""
    inset: tuple = ()        # optional curves drawn in a small inset
    inset_ylabel: str = ""


@dataclass(frozen=True)
class FigureSpec:
    panels: tuple
    output: str
    nrows: int = 1
    ncols: int = 0  # 0: one column per panel
    suptitle: str = ""


def _x_column(table):
    return "t" if "t" in table else "alpha"


def _draw_curves(ax, curves, tables):
    for cv in curves:
        table = tables[cv.csv]
        if cv.column not in table:
            raise FigureInputError(f"{cv.csv}: no column {cv.column!r}")
        ax.plot(table[_x_column(table)], table[cv.column], label=cv.label,
                color=cv.color, linestyle=cv.linestyle, linewidth=1.4)


def render(spec):
    """Render a FigureSpec to its output image path."""
    if not spec.panels:
        raise FigureInputError("figure spec has no panels")
    tables = {}
    for panel in spec.panels:
        for cv in tuple(panel.curves) + tuple(panel.inset):
            if cv.csv not in tables:
                tables[cv.csv] = load_csv(cv.csv)

    ncols = spec.ncols or (len(spec.panels) + spec.nrows - 1) // spec.nrows
    fig, axes = plt.subplots(spec.nrows, ncols,
                             figsize=(4.2 * ncols, 3.2 * spec.nrows),
                             squeeze=False)
    flat = axes.ravel()
    for ax in flat[len(spec.panels):]:
        ax.set_visible(False)
    for ax, panel in zip(flat, spec.panels):
        _draw_curves(ax, panel.curves, tables)
        ax.set_xlabel(panel.xlabel)
        ax.set_ylabel(panel.ylabel)
        if panel.title:
            ax.set_title(panel.title, fontsize=10)
        if any(cv.label for cv in panel.curves):
            ax.legend(frameon=False, fontsize=8)
        if panel.inset:
            ins = ax.inset_axes([0.55, 0.55, 0.4, 0.38])
            _draw_curves(ins, panel.inset, tables)
            ins.set_ylabel(panel.inset_ylabel, fontsize=7)
            ins.tick_params(labelsize=6)
    if spec.suptitle:
        fig.suptitle(spec.suptitle)
    fig.tight_layout()
    out = Path(spec.output)
    if out.parent != Path(""):
        out.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(out, dpi=150)
    plt.close(fig)
    return out
