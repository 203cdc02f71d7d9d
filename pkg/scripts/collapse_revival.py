"""Spin-population envelope of |i sqrt(n_bar)> chi_1 over one revival period.

Prints t, pop1 and the local oscillation contrast (one Rabi period wide) as CSV.
"""

import argparse
import csv
import math
import sys

import numpy as np

from diraccat import DiracState, EvolutionPlan, ModelParams, cat_schedule, coherent_vector, spin_populations
from diraccat.fock import required_cutoff


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--xi", type=float, default=1.0)
    ap.add_argument("--n-bar", type=float, default=30.0)
    ap.add_argument("--points", type=int, default=2001)
    args = ap.parse_args(argv)

    z_abs = math.sqrt(args.n_bar)
    p = ModelParams(args.xi, required_cutoff(z_abs) + 64)
    t_r = cat_schedule(p, args.n_bar).t_R
    ts = np.linspace(0.0, 1.5 * t_r, args.points)
    start = DiracState.product([1, 0, 0, 0], coherent_vector(1j * z_abs, p.cutoff))
    pop1 = np.array([spin_populations(DiracState(a))[0] for a in EvolutionPlan(p).propagate(start.amplitudes, ts)])

    half = math.pi / math.sqrt(1 + 4 * args.xi * args.n_bar)
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["t", "t_over_tR", "pop1", "contrast"])
    for t, v in zip(ts, pop1):
        sel = np.abs(ts - t) <= half
        writer.writerow([f"{t:.6g}", f"{t / t_r:.6g}", f"{v:.6g}", f"{np.ptp(pop1[sel]):.6g}"])


if __name__ == "__main__":
    main()
