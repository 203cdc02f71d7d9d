"""Batch front-end: ``diraccat CONFIG [--key value ...]``.

The config file holds ``key = value`` lines; ``#`` starts a comment.  Any key
may be overridden on the command line (``--z-abs 5`` overrides ``z_abs``).
Output is a CSV file, or a Husimi grid file for ``command = husimi``.

Exit codes: 0 success, 2 config error, 3 guard/truncation error, 4 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import math
import sys
import warnings
from dataclasses import dataclass, fields
from pathlib import Path

import numpy as np

from . import cat as cat_mod
from .diagnostics import (
    coherence_magnitude,
    default_extent,
    husimi_q,
    position_expectation,
    purity,
    reduced_density,
    save_grid,
)
from .evolution import EvolutionPlan, apply_hamiltonian, spin_populations
from .fock import TruncationError, coherent_vector, required_cutoff
from .hamiltonian import DiracState, ModelParams, landau_energy
from .lorentz import boosted_energy

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_GUARD = 3
EXIT_IO = 4

COMMANDS = ("spectrum", "evolve", "cat", "trajectory", "husimi")


class ConfigError(ValueError):
    def __init__(self, key: str, message: str):
        super().__init__(f"{key}: {message}")
        self.key = key


@dataclass(frozen=True)
class RunConfig:
    command: str
    xi: float
    output_path: str
    z_abs: float = 0.0
    pz: float = 0.0
    cutoff: int | None = None
    t_max: float = 10.0
    n_steps: int = 200
    sign: int = 1  # trajectory branch
    resolution: int = 201  # husimi grid points per axis

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ConfigError("command", f"must be one of {', '.join(COMMANDS)}, got {self.command!r}")
        checks = [
            ("xi", self.xi > 0 and math.isfinite(self.xi), "must be positive"),
            ("z_abs", self.z_abs >= 0 and math.isfinite(self.z_abs), "must be non-negative"),
            ("pz", math.isfinite(self.pz), "must be finite"),
            ("cutoff", self.cutoff is None or self.cutoff >= 1, "must be >= 1"),
            ("t_max", self.t_max > 0 and math.isfinite(self.t_max), "must be positive"),
            ("n_steps", self.n_steps >= 1, "must be >= 1"),
            ("sign", self.sign in (1, -1), "must be + or -"),
            ("resolution", self.resolution >= 2, "must be >= 2"),
        ]
        for key, ok, msg in checks:
            if not ok:
                raise ConfigError(key, msg)
        if self.command in ("cat", "trajectory", "husimi") and self.z_abs <= 0:
            raise ConfigError("z_abs", f"must be positive for command {self.command}")

    @property
    def effective_cutoff(self) -> int:
        if self.cutoff is not None:
            return self.cutoff
        return required_cutoff(self.z_abs) + 8

    @property
    def params(self) -> ModelParams:
        return ModelParams(self.xi, self.effective_cutoff, self.pz)

    @property
    def z(self) -> complex:
        return cat_mod.start_amplitude(self.z_abs)

    def times(self) -> np.ndarray:
        return np.linspace(0.0, self.t_max, self.n_steps + 1)


_FIELDS = {f.name: f for f in fields(RunConfig)}
_ALIASES = {"output": "output_path"}


def _convert(key: str, raw: str):
    raw = raw.strip()
    try:
        if key in ("command", "output_path"):
            if not raw:
                raise ValueError("empty")
            return raw
        if key == "sign":
            mapping = {"+": 1, "+1": 1, "1": 1, "-": -1, "-1": -1}
            if raw not in mapping:
                raise ValueError(raw)
            return mapping[raw]
        if key in ("cutoff", "n_steps", "resolution"):
            return int(raw)
        return float(raw)
    except ValueError:
        raise ConfigError(key, f"cannot parse value {raw!r}") from None


def parse_config_text(text: str) -> dict:
    values = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}", f"expected 'key = value', got {line!r}")
        key, raw = (s.strip() for s in line.split("=", 1))
        key = _ALIASES.get(key, key)
        if key not in _FIELDS:
            raise ConfigError(key, "unknown key")
        values[key] = _convert(key, raw)
    return values


def make_config(values: dict) -> RunConfig:
    for key in ("command", "xi", "output_path"):
        if key not in values:
            raise ConfigError(key, "required key missing")
    return RunConfig(**values)


def _fmt(v) -> str:
    if isinstance(v, str):
        return v
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return format(float(v), ".9g")


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_fmt(v) for v in row])
    return buf.getvalue()


def _initial_state(cfg: RunConfig) -> DiracState:
    return DiracState.product([1, 0, 0, 0], coherent_vector(cfg.z, cfg.effective_cutoff))


def run_spectrum(cfg: RunConfig) -> str:
    params = cfg.params
    n = np.arange(params.cutoff)
    rows = zip(n, landau_energy(params, n), boosted_energy(params, n), 1.0 + 2.0 * params.xi * (n + 1))
    return _csv_text(["n_r", "E_plus_rest_frame", "E_plus_boosted", "E_nonrel_approx"], rows)


def run_evolve(cfg: RunConfig) -> str:
    params = cfg.params
    plan = EvolutionPlan(params)
    times = cfg.times()
    rows = []
    for t, amps in zip(times, plan.propagate(_initial_state(cfg).amplitudes, times)):
        state = DiracState(amps)
        pops = spin_populations(state)
        e = np.vdot(state.flat, apply_hamiltonian(params, state).flat).real
        rows.append([t, *pops, state.norm(), e, purity(reduced_density(state, "spinor"))])
    header = ["t", "pop1", "pop2", "pop3", "pop4", "norm", "energy", "spinor_purity"]
    return _csv_text(header, rows)


def run_trajectory(cfg: RunConfig) -> str:
    params = cfg.params
    plan = EvolutionPlan(params)
    times = cfg.times()
    start = cat_mod.initial_branch_state(params, cfg.z, cfg.sign)
    x_asym, y_asym = cat_mod.trajectory(params, cfg.z, cfg.sign, times)
    rows = []
    for i, amps in enumerate(plan.propagate(start.amplitudes, times)):
        x, y = position_expectation(DiracState(amps))
        rows.append([times[i], x, y, x_asym[i], y_asym[i]])
    return _csv_text(["t", "x_exact", "y_exact", "x_asym", "y_asym"], rows)


def run_cat(cfg: RunConfig) -> str:
    params = cfg.params
    n_bar = cfg.z_abs**2
    sched = cat_mod.cat_schedule(params, n_bar)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        cat = cat_mod.dirac_cat(params, cfg.z)
    composite = cat_mod.asymptotic_composite(params, cfg.z, sched.t_d)
    plus, minus = cat.components
    w_plus, w_minus = (abs(w) ** 2 for w in cat.weights)
    row = [
        sched.t_R,
        sched.t_d,
        cat_mod.spinor_overlap_numeric(params, cfg.z),
        abs(np.vdot(plus, minus)),
        coherence_magnitude(composite, plus, minus),
        cat_mod.regime_label(n_bar),
        w_plus,
        w_minus,
    ]
    header = [
        "t_R",
        "t_d",
        "spinor_overlap",
        "component_overlap",
        "coherence_magnitude",
        "regime_label",
        "weight_plus",
        "weight_minus",
    ]
    return _csv_text(header, [row])


def husimi_at_cat_time(cfg: RunConfig):
    params = cfg.params
    t_d = cat_mod.cat_schedule(params, cfg.z_abs**2).t_d
    plan = EvolutionPlan(params)
    state = DiracState(plan.propagate(_initial_state(cfg).amplitudes, t_d)[0])
    extent = default_extent(cfg.z_abs)
    res = (cfg.resolution, cfg.resolution)
    return husimi_q(reduced_density(state, "orbital"), extent, extent, res)


def run(cfg: RunConfig) -> None:
    """Execute one configured run and write its output file."""
    out = Path(cfg.output_path)
    if cfg.command == "husimi":
        save_grid(husimi_at_cat_time(cfg), out)
        return
    handlers = {
        "spectrum": run_spectrum,
        "evolve": run_evolve,
        "trajectory": run_trajectory,
        "cat": run_cat,
    }
    text = handlers[cfg.command](cfg)
    out.write_text(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="diraccat", description=__doc__.splitlines()[0])
    parser.add_argument("config", help="key = value run configuration file")
    for name in _FIELDS:
        flag = "--" + name.replace("_", "-")
        parser.add_argument(flag, dest=name, default=None, metavar=name.upper())
    parser.add_argument("-o", dest="output_path", default=None, help="alias for --output-path")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        try:
            text = Path(args.config).read_text()
        except OSError as exc:
            print(f"error: config: cannot read {args.config}: {exc.strerror}", file=sys.stderr)
            return EXIT_IO
        values = parse_config_text(text)
        for name in _FIELDS:
            raw = getattr(args, name)
            if raw is not None:
                values[name] = _convert(name, raw)
        cfg = make_config(values)
        run(cfg)
    except ConfigError as exc:
        print(f"error: config: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except TruncationError as exc:
        print(f"error: cutoff: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except OSError as exc:
        print(f"error: output_path: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
