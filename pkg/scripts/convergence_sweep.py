"""Mean sockuence average and sock number, scaled by n, across a grid of n.

    python scripts/convergence_sweep.py --r 3 --samples 200 --grid 100,1000,10000
"""

import argparse
import sys

from sockmatch.experiments import ExperimentSpec, sweep
from sockmatch.wordio import emit_table


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--r", type=int, default=2)
    ap.add_argument("--samples", type=int, default=200)
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--grid", default="100,1000,10000")
    args = ap.parse_args()
    grid = [int(x) for x in args.grid.split(",")]

    rows = []
    for stat in ("avg", "max"):
        template = ExperimentSpec(n=1, r=args.r, samples=args.samples, seed=args.seed, statistic=stat)
        for s in sweep(template, grid, workers=args.workers):
            rows.append({
                "statistic": stat,
                "n": s.spec.n,
                "mean_over_n": round(s.scaled_mean, 6),
                "center": round(s.center, 6),
                "gap": round(abs(s.scaled_mean - s.center), 6),
                "std": round(s.std, 3),
            })
    emit_table(rows, sys.stdout, "csv")


if __name__ == "__main__":
    main()
