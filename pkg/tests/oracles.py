"""Brute-force oracles, written straight from the definitions.

Nothing here imports the package's algorithms; only the value types.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations, product


def all_matchings_by_permutation(n: int, r: int) -> set[tuple[tuple[int, ...], ...]]:
    """Chop every permutation of [rn] into r-blocks and deduplicate. Tiny n only."""
    out = set()
    for perm in permutations(range(1, r * n + 1)):
        blocks = tuple(sorted(tuple(sorted(perm[i:i + r])) for i in range(0, r * n, r)))
        out.add(blocks)
    return out


def all_matchings_recursive(n: int, r: int):
    """Set-partition recursion over a list of free positions (independent of the package)."""

    def rec(free):
        if not free:
            yield ()
            return
        first, rest = free[0], free[1:]
        for others in combinations(rest, r - 1):
            remaining = [p for p in rest if p not in others]
            for tail in rec(remaining):
                yield ((first,) + others,) + tail

    yield from rec(list(range(1, r * n + 1)))


def sockuence_by_definition(blocks, r: int) -> list[int]:
    """x_k = sum over blocks meeting both [k] and its complement of |e & [k]|."""
    size = r * len(blocks)
    xs = []
    for k in range(1, size + 1):
        x = 0
        for e in blocks:
            inside = sum(1 for p in e if p <= k)
            if 0 < inside < r:
                x += inside
        xs.append(x)
    return xs


def bipartite_by_subsets(blocks) -> int:
    """Largest set of edges whose left ends all precede all right ends (r = 2)."""
    best = 0
    k = len(blocks)
    for size in range(k, 0, -1):
        for sub in combinations(blocks, size):
            if max(a for a, _ in sub) < min(b for _, b in sub):
                return size
    return best


def dyck_paths(n: int) -> list[tuple[int, ...]]:
    out = []
    for steps in product((1, -1), repeat=2 * n):
        h = 0
        ok = True
        for s in steps:
            h += s
            if h < 0:
                ok = False
                break
        if ok and h == 0:
            out.append(steps)
    return out


def height(steps) -> int:
    h = best = 0
    for s in steps:
        h += s
        best = max(best, h)
    return best


def pair_word(e1, e2) -> str:
    first = min(min(e1), min(e2))
    lead = set(e1) if first in e1 else set(e2)
    return "".join("A" if p in lead else "B" for p in sorted(set(e1) | set(e2)))


def mean_fraction(values) -> Fraction:
    values = list(values)
    return Fraction(sum(values), len(values))
