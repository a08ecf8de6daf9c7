"""Scenario runner: flat key=value configs, CSV time series, JSON reports.

A config file holds ``key = value`` lines ('#' starts a comment).  Scalar
keys provide shared defaults; each optional, repeatable ``run`` line adds one
labelled scenario:

    run = f24_T0 system=fermion state=f24 temperature_ratio=0

With ``run`` lines present the outputs go to ``out_dir/<label>.csv`` plus
``out_dir/<label>.report.json``; without them the file describes a single
scenario written to ``out``/``report``.  Command line flags override the
shared scalar keys.  Unknown keys are errors, not warnings.

Exit codes: 0 success, 2 config error, 3 numeric failure, 4 unknown state
name, 5 unwritable output.
"""

import argparse
import json
import math
import sys
import warnings
from pathlib import Path

import numpy as np

from . import analysis, measures, numerics
from .channel import MODES, BathParams
from .hilbert import (FERMION, QUBIT, STATE_NAMES, StateVector, dfs_state,
                      make_system, named_state, pure_density)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERIC = 3
EXIT_STATE = 4
EXIT_OUTPUT = 5

CSV_HEADER = "t,concurrence,coherence,linear_entropy"
SWEEP_HEADER = "alpha,concurrence"

_SHARED_KEYS = {
    "system", "state", "alpha", "temperature_ratio", "j0", "omega_c",
    "omega0", "mode", "t_max", "steps", "n_modes", "omega_max",
    "out", "report", "out_dir", "sweep", "sweep_points",
}
_RUN_KEYS = {"system", "state", "alpha", "temperature_ratio", "mode",
             "t_max", "steps", "sweep"}

_DEFAULTS = {
    "temperature_ratio": "0",
    "j0": "1",
    "omega_c": "1",
    "omega0": "0",
    "t_max": "10",
    "steps": "2000",
    "sweep_points": "201",
}


class ConfigError(Exception):
    pass


class UnknownStateError(Exception):
    pass


class OutputError(Exception):
    pass


def _parse_ratio(text):
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        return float(num) / float(den)
    return float(text)


def _parse_config_file(path):
    try:
        lines = Path(path).read_text().splitlines()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    scalars = {}
    runs = []
    for ln, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{ln}: expected 'key = value'")
        key, value = (s.strip() for s in line.split("=", 1))
        if key == "run":
            runs.append(_parse_run_line(value, f"{path}:{ln}"))
        elif key in _SHARED_KEYS:
            scalars[key] = value
        else:
            raise ConfigError(f"{path}:{ln}: unknown key {key!r}")
    return scalars, runs


def _parse_run_line(value, where):
    tokens = value.split()
    if not tokens:
        raise ConfigError(f"{where}: empty run line")
    label = tokens[0]
    overrides = {}
    for tok in tokens[1:]:
        if "=" not in tok:
            raise ConfigError(f"{where}: run option {tok!r} is not key=value")
        key, val = tok.split("=", 1)
        if key not in _RUN_KEYS:
            raise ConfigError(f"{where}: unknown run key {key!r}")
        overrides[key] = val
    return label, overrides


def _build_parser():
    p = argparse.ArgumentParser(
        prog="colldeph",
        description="Evolve fermion/qubit pairs under collective pure dephasing "
                    "and track entanglement, coherence and mixedness.",
    )
    p.add_argument("--config", help="flat key=value scenario file")
    p.add_argument("--system", choices=(FERMION, QUBIT))
    p.add_argument("--state", help="named state or comma separated amplitudes")
    p.add_argument("--alpha", help="weight for the dfs_* state family (complex ok)")
    p.add_argument("--temperature-ratio", dest="temperature_ratio",
                   help="T over the cutoff temperature; 0 means T = 0; fractions ok")
    p.add_argument("--j0", help="dimensionless bath coupling")
    p.add_argument("--omega-c", dest="omega_c", help="bath cutoff frequency")
    p.add_argument("--omega0", help="level splitting frequency")
    p.add_argument("--mode", choices=MODES, help="bath evaluation mode")
    p.add_argument("--t-max", dest="t_max", help="horizon in raw time units")
    p.add_argument("--steps", help="number of samples in the time series")
    p.add_argument("--out", help="CSV output path (single scenario)")
    p.add_argument("--report", help="JSON report path (single scenario)")
    return p


def _resolve_state(settings):
    spec = settings.get("state")
    if spec is None:
        raise ConfigError("no state given (use state = <name> or amplitudes)")
    alpha = settings.get("alpha")
    alpha_c = complex(alpha) if alpha not in (None, "") else None
    omega0 = float(settings.get("omega0", "0"))
    if "," in spec:
        amps = np.array([complex(tok) for tok in spec.split(",")], dtype=np.complex128)
        kind = {6: FERMION, 4: QUBIT}.get(amps.size)
        if kind is None:
            raise ConfigError(f"amplitude list of length {amps.size}; expected 4 or 6")
        norm = float(np.sqrt(np.sum(np.abs(amps) ** 2)))
        if abs(norm - 1.0) > 1e-9:
            raise ConfigError(f"amplitude list norm {norm!r} too far from 1")
        if abs(norm - 1.0) > 1e-12:
            warnings.warn(f"renormalizing amplitude list (norm {norm!r})", stacklevel=2)
            amps = amps / norm
        psi = StateVector(make_system(kind, omega0), amps)
    else:
        try:
            psi = named_state(spec, alpha=alpha_c, omega0=omega0)
        except KeyError as exc:
            raise UnknownStateError(str(exc)) from exc
        except ValueError as exc:
            raise ConfigError(str(exc)) from exc
    wanted = settings.get("system")
    if wanted and wanted != psi.system.kind:
        raise ConfigError(f"state {spec!r} is a {psi.system.kind} state, not {wanted}")
    return psi


def _resolve_bath(settings):
    ratio = _parse_ratio(settings.get("temperature_ratio", "0"))
    kw = {}
    if "n_modes" in settings:
        kw["n_modes"] = int(settings["n_modes"])
    if "omega_max" in settings:
        kw["omega_max"] = float(settings["omega_max"])
    return BathParams.from_temperature_ratio(
        ratio,
        j0=float(settings.get("j0", "1")),
        omega_c=float(settings.get("omega_c", "1")),
        mode=settings.get("mode"),
        **kw,
    )


def _format_row(values):
    return ",".join(f"{v:.15g}" for v in values)


def _write_text(path, text):
    path = Path(path)
    try:
        if path.parent != Path(""):
            path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise OutputError(f"cannot write {path}: {exc}") from exc


def _bath_json(params):
    return {
        "mode": params.mode,
        "j0": params.j0,
        "omega_c": params.omega_c,
        "beta": "inf" if math.isinf(params.beta) else params.beta,
        "temperature_ratio": params.temperature_ratio,
        "n_modes": params.n_modes if params.mode == "discrete" else None,
        "omega_max": params.resolved_omega_max() if params.mode == "discrete" else None,
    }


def _run_series(label, settings, csv_path, report_path):
    psi = _resolve_state(settings)
    params = _resolve_bath(settings)
    t_max = float(settings.get("t_max", "10"))
    steps = int(settings.get("steps", "2000"))
    series = analysis.time_series(psi, params, t_max=t_max, n_steps=steps)
    report = analysis.full_report(psi, params, t_max=t_max, n_scan=max(steps, 2000))

    rows = [CSV_HEADER]
    for i in range(series.times.size):
        rows.append(_format_row((series.times[i], series.concurrence[i],
                                 series.coherence[i], series.linear_entropy[i])))
    _write_text(csv_path, "\n".join(rows) + "\n")

    alpha = settings.get("alpha")
    doc = {
        "label": label,
        "kind": "time-series",
        "system": psi.system.kind,
        "state": settings.get("state"),
        "alpha": alpha if alpha not in (None, "") else None,
        "omega0": psi.system.omega0,
        "t_max": t_max,
        "steps": steps,
        "bath": _bath_json(params),
        "regime": report.regime,
        "dfs_overlap": report.dfs_overlap,
        "saturation_entropy": analysis.saturation_entropy(psi),
        "initial_concurrence_zero": bool(series.concurrence[0] <= analysis.EPS_DEAD),
        "events": [{"kind": ev.kind, "time": ev.time} for ev in report.events],
        "csv": str(csv_path),
    }
    _write_text(report_path, json.dumps(doc, indent=2, sort_keys=True) + "\n")
    summary = report.regime
    if report.events:
        summary += "; events " + ", ".join(f"{e.kind}@{e.time:.4g}" for e in report.events)
    print(f"[{label}] {psi.system.kind}/{settings.get('state')}: {summary} -> {csv_path}")


def _run_alpha_sweep(label, settings, csv_path, report_path):
    kind = settings.get("system")
    state = settings.get("state", "")
    if state == "dfs_fermion":
        kind = FERMION
    elif state == "dfs_qubit":
        kind = QUBIT
    elif kind is None:
        raise ConfigError("alpha sweep needs state = dfs_fermion or dfs_qubit")
    system = make_system(kind, float(settings.get("omega0", "0")))
    n = int(settings.get("sweep_points", "201"))
    alphas = np.linspace(0.0, 1.0, n)
    rows = [SWEEP_HEADER]
    for a in alphas:
        c = measures.concurrence(pure_density(dfs_state(system, a)))
        rows.append(_format_row((a, c)))
    _write_text(csv_path, "\n".join(rows) + "\n")
    doc = {
        "label": label,
        "kind": "alpha-sweep",
        "system": kind,
        "state": state or f"dfs_{kind}",
        "points": n,
        "csv": str(csv_path),
    }
    _write_text(report_path, json.dumps(doc, indent=2, sort_keys=True) + "\n")
    print(f"[{label}] alpha sweep over dfs_{kind} ({n} points) -> {csv_path}")


def _execute(label, settings, csv_path, report_path):
    if settings.get("sweep", "").strip() == "alpha":
        _run_alpha_sweep(label, settings, csv_path, report_path)
    elif settings.get("sweep", "").strip() in ("", "none"):
        _run_series(label, settings, csv_path, report_path)
    else:
        raise ConfigError(f"unknown sweep kind {settings.get('sweep')!r}")


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        scalars, runs = ({}, [])
        if args.config:
            scalars, runs = _parse_config_file(args.config)
        for key in ("system", "state", "alpha", "temperature_ratio", "j0",
                    "omega_c", "omega0", "mode", "t_max", "steps", "out", "report"):
            val = getattr(args, key, None)
            if val is not None:
                scalars[key] = val

        settings = dict(_DEFAULTS)
        settings.update(scalars)

        if runs:
            out_dir = Path(settings.get("out_dir", "results"))
            seen = set()
            for label, overrides in runs:
                if label in seen:
                    raise ConfigError(f"duplicate run label {label!r}")
                seen.add(label)
                merged = dict(settings)
                merged.update(overrides)
                _execute(label, merged, out_dir / f"{label}.csv",
                         out_dir / f"{label}.report.json")
        else:
            csv_path = Path(settings.get("out", "timeseries.csv"))
            report_path = Path(settings.get("report", str(csv_path) + ".report.json"))
            _execute("run", settings, csv_path, report_path)
        return EXIT_OK
    except UnknownStateError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_STATE
    except (numerics.NotHermitianError, numerics.NotPSDError, ArithmeticError) as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (ConfigError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OutputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_OUTPUT


if __name__ == "__main__":
    raise SystemExit(main())
