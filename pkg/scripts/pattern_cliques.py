"""Largest P-cliques in random 3-matchings for subsets of the 3-partite patterns.

Exploratory only: charts z_P against sqrt(n) and n for |P| in {1, 2, 3, 4}.
Exact branch and bound, so keep n moderate.

    python scripts/pattern_cliques.py --grid 20,40,80 --samples 5
"""

import argparse
import itertools
import math
import sys

import numpy as np

from sockmatch.patterns import r_partite_patterns, z_clique
from sockmatch.randgen import SeedSpec, random_r_matching
from sockmatch.wordio import emit_table


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--grid", default="20,40,80")
    ap.add_argument("--samples", type=int, default=5)
    ap.add_argument("--seed", type=int, default=42)
    args = ap.parse_args()

    q3 = [p.word for p in r_partite_patterns(3)]
    subsets = [s for k in (1, 2, 3, 4) for s in itertools.combinations(q3, k)]
    rows = []
    for n in (int(x) for x in args.grid.split(",")):
        ms = [random_r_matching(n, 3, SeedSpec(args.seed, i)) for i in range(args.samples)]
        for allowed in subsets:
            z = np.mean([z_clique(m, allowed) for m in ms])
            rows.append({
                "n": n,
                "patterns": "+".join(allowed),
                "mean_z": round(float(z), 3),
                "z_over_sqrt_n": round(float(z) / math.sqrt(n), 4),
                "z_over_n": round(float(z) / n, 4),
            })
    emit_table(rows, sys.stdout, "csv")


if __name__ == "__main__":
    main()
