"""r-patterns, pattern cliques, F-free sub-matchings and collectability probes.

A pattern is the order type of two disjoint r-blocks, written as a 2-letter
word of length 2r that starts with ``A``. For r = 2 these are the alignment
AABB, the nesting ABBA and the crossing ABAB.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .core import GaussWord, OrderedMatching
from .enumeration import SizeCapError
from .wordio import parse_word

ALIGNMENT = "AABB"
NESTING = "ABBA"
CROSSING = "ABAB"

DEFAULT_CLIQUE_CAP = 200


class SearchBudgetError(RuntimeError):
    pass


@dataclass(frozen=True, order=True)
class Pattern:
    r: int
    word: str

    def __post_init__(self):
        w = self.word
        if len(w) != 2 * self.r or set(w) != {"A", "B"} or w[0] != "A" or w.count("A") != self.r:
            raise ValueError(f"{w!r} is not a canonical {self.r}-pattern")

    @classmethod
    def of(cls, word: str) -> "Pattern":
        w = canonical_pattern_word(word)
        return cls(len(w) // 2, w)

    def bits(self) -> tuple[int, ...]:
        return tuple(0 if c == "A" else 1 for c in self.word)

    def is_r_partite(self) -> bool:
        """Splits into r consecutive intervals, each holding one A and one B."""
        return all(sorted(self.word[i:i + 2]) == ["A", "B"] for i in range(0, 2 * self.r, 2))

    def __str__(self) -> str:
        return self.word


def canonical_pattern_word(word: str) -> str:
    w = word.strip().upper()
    if len(set(w)) != 2:
        raise ValueError(f"{word!r} does not use exactly two letters")
    first = w[0]
    return "".join("A" if c == first else "B" for c in w)


def _as_pattern(p) -> Pattern:
    return p if isinstance(p, Pattern) else Pattern.of(p)


def classify_pair(e1: Sequence[int], e2: Sequence[int]) -> Pattern:
    s1, s2 = set(e1), set(e2)
    if s1 & s2:
        raise ValueError(f"blocks {tuple(e1)} and {tuple(e2)} overlap")
    if len(s1) != len(s2):
        raise ValueError("blocks must have equal size")
    first = min(s1 | s2)
    lead = s1 if first in s1 else s2
    word = "".join("A" if p in lead else "B" for p in sorted(s1 | s2))
    return Pattern(len(s1), word)


def all_patterns(r: int) -> list[Pattern]:
    if r < 1:
        raise ValueError("r must be positive")
    out = []
    for rest in combinations(range(1, 2 * r), r - 1):
        a_pos = {0, *rest}
        out.append(Pattern(r, "".join("A" if i in a_pos else "B" for i in range(2 * r))))
    return sorted(out)


def r_partite_patterns(r: int) -> list[Pattern]:
    return [p for p in all_patterns(r) if p.is_r_partite()]


# ---------------------------------------------------------------------------
# r = 2 single-pattern cliques


def _longest_increasing(seq: Sequence[int]) -> int:
    tails: list[int] = []
    for v in seq:
        i = bisect_left(tails, v)
        if i == len(tails):
            tails.append(v)
        else:
            tails[i] = v
    return len(tails)


def alignment_clique(m: OrderedMatching) -> int:
    """Most edges that pairwise align, i.e. pairwise disjoint as intervals."""
    count = 0
    last_right = 0
    for a, b in sorted(m.blocks, key=lambda e: e[1]):
        if a > last_right:
            count += 1
            last_right = b
    return count


def nesting_clique(m: OrderedMatching) -> int:
    """Longest chain by strict containment: rights decrease as lefts increase."""
    rights = [b for a, b in m.blocks]  # blocks are sorted by left end
    return _longest_increasing([-b for b in rights])


def crossing_clique(m: OrderedMatching) -> int:
    """Most pairwise crossing edges.

    Pairwise crossing edges all straddle one cut and their right ends increase
    with their left ends, so take the best LIS of right ends over cuts. Only
    cuts between a left end and an immediately following right end are needed.
    """
    if m.r != 2:
        raise ValueError("crossing fast path is for r = 2")
    lab_left = {a for a, _ in m.blocks}
    best = 1 if m.blocks else 0
    for c in range(1, m.size):
        if c in lab_left and (c + 1) not in lab_left:
            rights = [b for a, b in m.blocks if a <= c < b]
            if len(rights) > best:
                best = max(best, _longest_increasing(rights))
    return best


_FAST = {ALIGNMENT: alignment_clique, NESTING: nesting_clique, CROSSING: crossing_clique}


# ---------------------------------------------------------------------------
# exact maximum clique on the compatibility graph


def max_clique(adj: Sequence[int]) -> list[int]:
    """Maximum clique of a graph given as neighbour bitmasks.

    Branch and bound with a greedy-colouring upper bound; the incumbent is
    seeded with a greedy clique.
    """
    nv = len(adj)
    if nv == 0:
        return []

    # greedy seed: repeatedly take the candidate with most neighbours among candidates
    seed: list[int] = []
    cand = (1 << nv) - 1
    while cand:
        v = max(_bits(cand), key=lambda u: bin(adj[u] & cand).count("1"))
        seed.append(v)
        cand &= adj[v]
    best = list(seed)

    def colour_order(p: int) -> list[tuple[int, int]]:
        order = []
        colour = 0
        uncoloured = p
        while uncoloured:
            colour += 1
            q = uncoloured
            while q:
                low = q & -q
                v = low.bit_length() - 1
                q &= ~adj[v] & ~low
                uncoloured &= ~low
                order.append((v, colour))
        return order

    def expand(current: list[int], p: int) -> None:
        nonlocal best
        for v, colour in reversed(colour_order(p)):
            if len(current) + colour <= len(best):
                return
            current.append(v)
            np_ = p & adj[v]
            if np_:
                expand(current, np_)
            elif len(current) > len(best):
                best = list(current)
            current.pop()
            p &= ~(1 << v)

    expand([], (1 << nv) - 1)
    return sorted(best)


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def compatibility_graph(m: OrderedMatching, allowed: Iterable) -> list[int]:
    allowed_words = {_as_pattern(p).word for p in allowed}
    blocks = m.blocks
    adj = [0] * len(blocks)
    for i, j in combinations(range(len(blocks)), 2):
        if classify_pair(blocks[i], blocks[j]).word in allowed_words:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    return adj


def z_clique(m: OrderedMatching, allowed: Iterable, cap: int = DEFAULT_CLIQUE_CAP, fast: bool = True) -> int:
    """Size of the largest sub-matching whose every pair of blocks forms an allowed pattern."""
    allowed = [_as_pattern(p) for p in allowed]
    for p in allowed:
        if p.r != m.r:
            raise ValueError(f"pattern {p} has r={p.r}, matching has r={m.r}")
    if fast and m.r == 2 and len(allowed) == 1:
        return _FAST[allowed[0].word](m)
    if m.n > cap:
        raise SizeCapError(f"{m.n} blocks exceed the clique cap {cap}")
    return len(max_clique(compatibility_graph(m, allowed)))


def clique_witness(m: OrderedMatching, allowed: Iterable, cap: int = DEFAULT_CLIQUE_CAP) -> list[tuple[int, ...]]:
    if m.n > cap:
        raise SizeCapError(f"{m.n} blocks exceed the clique cap {cap}")
    return [m.blocks[i] for i in max_clique(compatibility_graph(m, allowed))]


# ---------------------------------------------------------------------------
# F-free sub-matchings


def _as_matching(f, r: int | None) -> OrderedMatching:
    if isinstance(f, OrderedMatching):
        return f
    if isinstance(f, str):
        w = parse_word(f)
        counts = {c: w.letters.count(c) for c in set(w.letters)}
        rr = set(counts.values())
        if len(rr) != 1:
            raise ValueError(f"{f!r} is not a Gauss word")
        return OrderedMatching.from_labels(w.letters, rr.pop())
    if isinstance(f, GaussWord):
        return OrderedMatching.from_labels(f.letters, f.r)
    raise TypeError(f"cannot interpret {f!r} as a matching")


def _pattern_of_subset(blocks: Sequence[tuple[int, ...]], idx: Sequence[int]) -> tuple[int, ...]:
    tagged = sorted((p, k) for k, i in enumerate(idx) for p in blocks[i])
    seen: dict[int, int] = {}
    out = []
    for _, k in tagged:
        if k not in seen:
            seen[k] = len(seen)
        out.append(seen[k])
    return tuple(out)


def ex_free(m: OrderedMatching, forbidden: Iterable, cap: int = 24) -> int:
    """Largest sub-matching of ``m`` containing no copy of any forbidden matching."""
    targets: dict[int, set[tuple[int, ...]]] = {}
    for f in forbidden:
        fm = _as_matching(f, m.r)
        if fm.r != m.r or fm.n == 0:
            continue
        targets.setdefault(fm.n, set()).add(fm.labels())
    if 1 in targets:
        return 0
    k = m.n
    if k > cap:
        raise SizeCapError(f"{k} blocks exceed the brute-force cap {cap}")
    blocks = m.blocks
    best = 0

    def creates_copy(chosen: list[int], i: int) -> bool:
        for size, words in targets.items():
            if size - 1 > len(chosen):
                continue
            for others in combinations(chosen, size - 1):
                if _pattern_of_subset(blocks, sorted(others + (i,))) in words:
                    return True
        return False

    def rec(i: int, chosen: list[int]) -> None:
        nonlocal best
        if len(chosen) + (k - i) <= best:
            return
        if i == k:
            best = len(chosen)
            return
        if not creates_copy(chosen, i):
            chosen.append(i)
            rec(i + 1, chosen)
            chosen.pop()
        rec(i + 1, chosen)

    rec(0, [])
    return best


# ---------------------------------------------------------------------------
# collectability


def collectable_probe(p, k: int, budget: int = 5_000_000) -> OrderedMatching | None:
    """Search for a k-block matching in which every pair of blocks forms ``p``.

    The search is exhaustive over canonical words, so ``None`` means no such
    clique exists for this k. A witness for one k says nothing about larger k;
    collectability itself (every k) is not decided here.
    """
    p = _as_pattern(p)
    r = p.r
    bits = p.bits()
    lead_a = bits.index(1)
    size = r * k
    word: list[int] = []
    counts: list[int] = []
    progress: dict[tuple[int, int], int] = {}
    nodes = 0

    def rec() -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise SearchBudgetError(f"collectability search for {p} at k={k} exceeded {budget} nodes")
        if len(word) == size:
            return True
        for c in range(len(counts) + (1 if len(counts) < k else 0)):
            new = c == len(counts)
            if new:
                if any(cnt > lead_a for cnt in counts):
                    continue
                touched = [(a, c, counts[a]) for a in range(len(counts))]
                if any(bits[t] != 1 for _, _, t in touched):
                    continue
            else:
                if counts[c] == r:
                    continue
                touched = []
                ok = True
                for d in range(len(counts)):
                    if d == c:
                        continue
                    key = (d, c) if d < c else (c, d)
                    t = progress[key]
                    if bits[t] != (0 if c == key[0] else 1):
                        ok = False
                        break
                    touched.append((key[0], key[1], t))
                if not ok:
                    continue
            # apply
            if new:
                counts.append(1)
                for a, _, t in touched:
                    progress[(a, c)] = t + 1
            else:
                counts[c] += 1
                for a, b, t in touched:
                    progress[(a, b)] = t + 1
            word.append(c)
            if rec():
                return True
            word.pop()
            if new:
                counts.pop()
                for a, _, _ in touched:
                    del progress[(a, c)]
            else:
                counts[c] -= 1
                for a, b, t in touched:
                    progress[(a, b)] = t
        return False

    if k <= 0:
        return OrderedMatching(r, ())
    if rec():
        return OrderedMatching.from_labels(word, r)
    return None

