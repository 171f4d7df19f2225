"""Exhaustive iteration over all r-matchings of [rn], plus brute-force oracles."""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterator

from .core import OrderedMatching
from .formulas import matching_count

DEFAULT_BUDGET = 10**7


class BudgetExceededError(RuntimeError):
    pass


class SizeCapError(ValueError):
    pass


def _check_budget(n: int, r: int, budget: int | None) -> None:
    total = matching_count(n, r)
    if budget is not None and total > budget:
        raise BudgetExceededError(f"{total} matchings of size {n} (r={r}) exceed budget {budget}")


def iter_labelings(n: int, r: int = 2, budget: int | None = DEFAULT_BUDGET) -> Iterator[tuple[int, ...]]:
    """Yield every r-matching of [rn] once, as its canonical label word.

    The smallest free position opens a new block and picks its other r-1
    members among the remaining free positions, in lexicographic order.
    """
    _check_budget(n, r, budget)
    size = r * n
    labels = [-1] * size

    def rec(block: int) -> Iterator[tuple[int, ...]]:
        if block == n:
            yield tuple(labels)
            return
        first = labels.index(-1)
        labels[first] = block
        free = [p for p in range(first + 1, size) if labels[p] == -1]
        for rest in combinations(free, r - 1):
            for p in rest:
                labels[p] = block
            yield from rec(block + 1)
            for p in rest:
                labels[p] = -1
        labels[first] = -1

    yield from rec(0)


def iter_matchings(n: int, r: int = 2, budget: int | None = DEFAULT_BUDGET) -> Iterator[OrderedMatching]:
    for lab in iter_labelings(n, r, budget):
        yield OrderedMatching.from_labels(lab, r)


def for_each_matching(
    n: int,
    r: int,
    visitor: Callable[[OrderedMatching], None],
    budget: int | None = DEFAULT_BUDGET,
) -> None:
    for m in iter_matchings(n, r, budget):
        visitor(m)


@dataclass
class SockTable:
    n: int
    r: int
    counts: dict[int, int] = field(default_factory=dict)

    def total(self) -> int:
        return sum(self.counts.values())

    def at_most(self, j: int) -> int:
        return sum(c for k, c in self.counts.items() if k <= j)

    def rows(self) -> list[dict]:
        return [{"n": self.n, "r": self.r, "j": j, "s": c} for j, c in sorted(self.counts.items())]


# The sock distribution is enumerated by scanning positions left to right. At
# each position the sock either starts a new pack or joins one specific open
# pack; every choice sequence is a distinct matching, so each matching is one
# leaf. State: fills of the open packs, packs started, socks on the floor, and
# the running maximum.


def _scan_leaves(n: int, r: int, fills: list[int], started: int, pos: int, x: int, best: int, acc: Counter) -> None:
    if pos == r * n:
        acc[best] += 1
        return
    if started < n:
        fills.append(1)
        x1 = x + 1
        _scan_leaves(n, r, fills, started + 1, pos + 1, x1, best if best >= x1 else x1, acc)
        fills.pop()
    for i in range(len(fills)):
        f = fills[i]
        if f == r:  # pack already gone
            continue
        if f + 1 == r:
            fills[i] = r
            _scan_leaves(n, r, fills, started, pos + 1, x - f, best, acc)
            fills[i] = f
        else:
            fills[i] = f + 1
            x1 = x + 1
            _scan_leaves(n, r, fills, started, pos + 1, x1, best if best >= x1 else x1, acc)
            fills[i] = f


def _scan_leaves_r2(n: int, open_: int, started: int, pos: int, best: int, acc: Counter) -> None:
    # Specialisation for r = 2: the state is just the number of open edges.
    if pos == 2 * n:
        acc[best] += 1
        return
    if started < n:
        o = open_ + 1
        _scan_leaves_r2(n, o, started + 1, pos + 1, best if best >= o else o, acc)
    for _ in range(open_):
        _scan_leaves_r2(n, open_ - 1, started, pos + 1, best, acc)


def _scan_roots(n: int, r: int, depth: int) -> list[tuple]:
    """Expand the scan tree to ``depth`` positions; one entry per distinct branch."""
    roots = [((), 0, 0, 0, 0)]
    for _ in range(min(depth, r * n)):
        nxt = []
        for fills, started, pos, x, best in roots:
            fills = list(fills)
            if started < n:
                nxt.append((tuple(fills + [1]), started + 1, pos + 1, x + 1, max(best, x + 1)))
            for i, f in enumerate(fills):
                g = fills[:i] + fills[i + 1:] if f + 1 == r else fills[:i] + [f + 1] + fills[i + 1:]
                x1 = x - f if f + 1 == r else x + 1
                nxt.append((tuple(g), started, pos + 1, x1, max(best, x1)))
        roots = nxt
    return roots


def _count_subtree(args) -> Counter:
    n, r, (fills, started, pos, x, best) = args
    acc: Counter = Counter()
    if r == 2:
        _scan_leaves_r2(n, len(fills), started, pos, best, acc)
    else:
        _scan_leaves(n, r, list(fills), started, pos, x, best, acc)
    return acc


def sock_distribution(n: int, r: int = 2, workers: int = 1, budget: int | None = DEFAULT_BUDGET) -> SockTable:
    """Exact s_j(n): how many r-matchings of [rn] have sock number j."""
    _check_budget(n, r, budget)
    if n == 0:
        return SockTable(0, r, {0: 1})
    roots = _scan_roots(n, r, depth=min(4, r * n))
    jobs = [(n, r, root) for root in roots]
    acc: Counter = Counter()
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            for part in ex.map(_count_subtree, jobs):
                acc.update(part)
    else:
        for job in jobs:
            acc.update(_count_subtree(job))
    return SockTable(n, r, dict(sorted(acc.items())))


def exhaustive_means(n: int, r: int = 2, budget: int | None = DEFAULT_BUDGET) -> dict:
    """Exact means over all matchings: each x_k, the sockuence average, the max."""
    size = r * n
    sums = [0] * size
    count = 0
    avg_sum = 0
    y_sum = 0
    for lab in iter_labelings(n, r, budget):
        seen = [0] * n
        x = 0
        y = 0
        tot = 0
        for k, c in enumerate(lab):
            f = seen[c] + 1
            seen[c] = f
            x = x - (r - 1) if f == r else x + 1
            sums[k] += x
            tot += x
            if x > y:
                y = x
        avg_sum += tot
        y_sum += y
        count += 1
    return {
        "count": count,
        "xk": [Fraction(s, count) for s in sums],
        "avg": Fraction(avg_sum, count * size) if size else Fraction(0),
        "y": Fraction(y_sum, count),
    }


def brute_max_subset(
    m: OrderedMatching,
    predicate: Callable[[tuple[int, ...], tuple[int, ...]], bool],
    cap: int = 20,
) -> int:
    """Largest set of blocks that are pairwise compatible under ``predicate``.

    Plain include/exclude search with the trivial bound; kept deliberately
    simple so it can serve as an oracle for the faster clique routines.
    """
    blocks = m.blocks
    k = len(blocks)
    if k > cap:
        raise SizeCapError(f"{k} blocks exceed the brute-force cap {cap}")
    ok = [[i == j or predicate(blocks[i], blocks[j]) for j in range(k)] for i in range(k)]
    best = 0

    def rec(i: int, chosen: list[int]) -> None:
        nonlocal best
        if len(chosen) + (k - i) <= best:
            return
        if i == k:
            best = len(chosen)
            return
        if all(ok[i][j] for j in chosen):
            chosen.append(i)
            rec(i + 1, chosen)
            chosen.pop()
        rec(i + 1, chosen)

    rec(0, [])
    return best
