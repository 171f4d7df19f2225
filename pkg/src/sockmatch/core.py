"""Value types shared across the package.

Positions are 1-based everywhere, so a matching of size ``n`` with block size
``r`` lives on ``{1, ..., r*n}``. Exact quantities use ``int`` and
``fractions.Fraction``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Hashable, Iterable, Sequence

ExactInteger = int
ExactRational = Fraction

__all__ = [
    "ExactInteger",
    "ExactRational",
    "MalformedWordError",
    "MalformedMatchingError",
    "UnsupportedMultiplicityError",
    "OrderedMatching",
    "Word",
    "GaussWord",
    "DyckTrace",
    "matching_from_word",
    "word_from_matching",
    "trace_of",
    "letter_name",
]


class MalformedWordError(ValueError):
    pass


class MalformedMatchingError(ValueError):
    pass


class UnsupportedMultiplicityError(ValueError):
    pass


def letter_name(i: int) -> str:
    """Compact name of the ``i``-th canonical letter (0 -> 'A')."""
    if not 0 <= i < 26:
        raise ValueError(f"letter index {i} has no compact name")
    return chr(ord("A") + i)


def _canonical_labels(letters: Iterable[Hashable]) -> tuple[int, ...]:
    seen: dict[Hashable, int] = {}
    out = []
    for c in letters:
        if c not in seen:
            seen[c] = len(seen)
        out.append(seen[c])
    return tuple(out)


@dataclass(frozen=True)
class Word:
    """A finite word over an arbitrary alphabet (letters are any hashables)."""

    letters: tuple

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def alphabet_size(self) -> int:
        return len(set(self.letters))

    def canonical(self) -> "Word":
        """Rename letters 0, 1, 2, ... by order of first occurrence."""
        return Word(_canonical_labels(self.letters))

    def isomorphic(self, other: "Word") -> bool:
        return _canonical_labels(self.letters) == _canonical_labels(other.letters)

    def __str__(self) -> str:
        from .wordio import format_word

        return format_word(self)


@dataclass(frozen=True)
class GaussWord(Word):
    """A word in which every letter occurs exactly ``r`` times."""

    r: int = 2

    def __post_init__(self):
        super().__post_init__()
        if self.r < 1:
            raise MalformedWordError(f"multiplicity must be positive, got {self.r}")
        counts: dict[Hashable, int] = {}
        for c in self.letters:
            counts[c] = counts.get(c, 0) + 1
        bad = {c: k for c, k in counts.items() if k != self.r}
        if bad:
            raise MalformedWordError(
                f"every letter must occur exactly {self.r} times; offending counts {bad}"
            )

    @property
    def n(self) -> int:
        return len(self.letters) // self.r

    def canonical(self) -> "GaussWord":
        return GaussWord(_canonical_labels(self.letters), self.r)

    @classmethod
    def from_word(cls, w: Word | Sequence, r: int) -> "GaussWord":
        letters = w.letters if isinstance(w, Word) else tuple(w)
        return cls(letters, r)


@dataclass(frozen=True)
class OrderedMatching:
    """A partition of ``{1..r*n}`` into ``n`` sorted blocks of size ``r``.

    Blocks are stored in canonical order (ascending smallest element).
    """

    r: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.r < 2:
            raise MalformedMatchingError(f"block size must be >= 2, got {self.r}")
        blocks = tuple(sorted(tuple(sorted(b)) for b in self.blocks))
        object.__setattr__(self, "blocks", blocks)
        seen = []
        for b in blocks:
            if len(b) != self.r:
                raise MalformedMatchingError(f"block {b} does not have size {self.r}")
            seen.extend(b)
        if sorted(seen) != list(range(1, self.r * len(blocks) + 1)):
            raise MalformedMatchingError("blocks must exactly cover 1..r*n")

    @property
    def n(self) -> int:
        return len(self.blocks)

    @property
    def size(self) -> int:
        """Number of positions, ``r*n``."""
        return self.r * len(self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def labels(self) -> tuple[int, ...]:
        """Block index (0-based, canonical order) of every position 1..rn."""
        lab = [0] * self.size
        for i, b in enumerate(self.blocks):
            for p in b:
                lab[p - 1] = i
        return tuple(lab)

    @classmethod
    def from_labels(cls, labels: Sequence[Hashable], r: int) -> "OrderedMatching":
        groups: dict[Hashable, list[int]] = {}
        for pos, c in enumerate(labels, start=1):
            groups.setdefault(c, []).append(pos)
        return cls(r, tuple(tuple(g) for g in groups.values()))

    def submatching(self, idx: Iterable[int]) -> "OrderedMatching":
        """Order-isomorphic relabelling of the blocks with the given indices."""
        chosen = [self.blocks[i] for i in idx]
        pos = sorted(p for b in chosen for p in b)
        rank = {p: k for k, p in enumerate(pos, start=1)}
        return OrderedMatching(self.r, tuple(tuple(rank[p] for p in b) for b in chosen))


@dataclass(frozen=True)
class DyckTrace:
    """A +1/-1 sequence with nonnegative prefix sums and total zero."""

    steps: tuple[int, ...]

    def __post_init__(self):
        steps = tuple(int(s) for s in self.steps)
        object.__setattr__(self, "steps", steps)
        h = 0
        for s in steps:
            if s not in (1, -1):
                raise ValueError(f"steps must be +1 or -1, got {s}")
            h += s
            if h < 0:
                raise ValueError("prefix sum went negative")
        if h != 0:
            raise ValueError("steps do not sum to zero")

    @property
    def n(self) -> int:
        return len(self.steps) // 2

    def __len__(self) -> int:
        return len(self.steps)

    def height(self) -> int:
        h = best = 0
        for s in self.steps:
            h += s
            best = max(best, h)
        return best

    def runs(self) -> tuple[int, ...]:
        """Alternating run lengths l1, r1, l2, r2, ... (starts with an up-run)."""
        out: list[int] = []
        prev = None
        for s in self.steps:
            if s == prev:
                out[-1] += 1
            else:
                out.append(1)
                prev = s
        return tuple(out)

    @classmethod
    def from_runs(cls, runs: Sequence[int]) -> "DyckTrace":
        steps: list[int] = []
        for i, k in enumerate(runs):
            steps.extend([1 if i % 2 == 0 else -1] * k)
        return cls(tuple(steps))


def matching_from_word(w: GaussWord | Word | Sequence, r: int | None = None) -> OrderedMatching:
    """Each letter's ``r`` positions become one block."""
    if isinstance(w, GaussWord) and r is None:
        r = w.r
    if r is None:
        raise TypeError("multiplicity r is required for a plain word")
    g = w if isinstance(w, GaussWord) and w.r == r else GaussWord.from_word(w, r)
    return OrderedMatching.from_labels(g.letters, r)


def word_from_matching(m: OrderedMatching) -> GaussWord:
    return GaussWord(m.labels(), m.r)


def trace_of(m: OrderedMatching) -> DyckTrace:
    if m.r != 2:
        raise UnsupportedMultiplicityError("Dyck traces are defined for r = 2 only")
    steps = [0] * m.size
    for a, b in m.blocks:
        steps[a - 1] = 1
        steps[b - 1] = -1
    return DyckTrace(tuple(steps))
