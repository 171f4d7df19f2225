"""Exact s_j(n) tables with the closed forms alongside, for r = 2 and small n.

    python scripts/sock_tables.py --max-n 8
"""

import argparse
import sys

from sockmatch.enumeration import sock_distribution
from sockmatch.formulas import closed_sock_counts, dyck_count_height_leq
from sockmatch.wordio import emit_table


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=8)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    rows = []
    for n in range(1, args.max_n + 1):
        table = sock_distribution(n, 2, workers=args.workers)
        closed = closed_sock_counts(n)
        for j, s in table.counts.items():
            rows.append({
                "n": n,
                "j": j,
                "s": s,
                "closed_form": closed.get(j, ""),
                "dyck_paths_height_le_j": dyck_count_height_leq(n, j),
            })
    emit_table(rows, sys.stdout, "csv")


if __name__ == "__main__":
    main()
