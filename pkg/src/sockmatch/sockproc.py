"""The sock process on an ordered r-matching.

Pull positions 1, 2, ... in order; a sock stays on the floor until the last
member of its pack is pulled, at which point the whole pack leaves. ``x_k`` is
the number of socks on the floor after ``k`` pulls.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import OrderedMatching, UnsupportedMultiplicityError


@dataclass(frozen=True)
class Sockuence:
    xs: tuple[int, ...]
    y: int
    avg: Fraction

    @property
    def total(self) -> int:
        return sum(self.xs)


@dataclass(frozen=True)
class LengthSummary:
    lengths: tuple[int, ...]
    total: int
    avg: Fraction


def sockuence_of_labels(labels, r: int) -> list[int]:
    """Sockuence of a word given as block labels, one pass with per-block counters."""
    seen: dict = {}
    xs = []
    x = 0
    for c in labels:
        k = seen.get(c, 0) + 1
        if k == r:
            x -= r - 1
            seen[c] = 0
        else:
            x += 1
            seen[c] = k
        xs.append(x)
    return xs


def sockuence(m: OrderedMatching) -> Sockuence:
    xs = sockuence_of_labels(m.labels(), m.r)
    if not xs:
        return Sockuence((), 0, Fraction(0))
    return Sockuence(tuple(xs), max(xs), Fraction(sum(xs), len(xs)))


def sock_number(m: OrderedMatching) -> int:
    return sockuence(m).y


def largest_bipartite_submatching(m: OrderedMatching) -> int:
    """Largest sub-matching with every left end before every right end (r = 2).

    Such a sub-matching is exactly a set of edges straddling a common cut, so
    the answer is the maximum straddle count over all cuts.
    """
    if m.r != 2:
        raise UnsupportedMultiplicityError("bipartite sub-matchings are defined here for r = 2")
    best = 0
    for c in range(1, m.size):
        best = max(best, sum(1 for a, b in m.blocks if a <= c < b))
    return best


def edge_lengths(m: OrderedMatching) -> LengthSummary:
    """Per-block length sum_j (i_r - i_j); the lengths add up to sum_k x_k."""
    lengths = tuple(sum(b[-1] - p for p in b[:-1]) for b in m.blocks)
    total = sum(lengths)
    avg = Fraction(total, len(lengths)) if lengths else Fraction(0)
    return LengthSummary(lengths, total, avg)
