"""Online left-to-right deletion of isomorphic copies of persecuted words.

Letters are scanned one at a time. Whenever the surviving prefix contains a
scattered copy of some family member (same equality pattern, letters renamed
bijectively), one copy is deleted: the one with the lexicographically smallest
tuple of positions, ties between family members going to the earlier member.
The check repeats until no copy remains, then the next letter is read.

Since the surviving prefix is copy-free before each new letter arrives, every
copy that appears must use that letter, and it is the last one. The search is
therefore anchored at the newest survivor.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable, Sequence

from .core import Word


@dataclass(frozen=True)
class Removal:
    step: int  # 1-based index of the letter whose arrival triggered the removal
    positions: tuple[int, ...]  # 1-based positions in the input word
    member: int  # index into the family


@dataclass
class PersecutionRun:
    input: Word
    family: tuple[Word, ...]
    survivors: list[int] = field(default_factory=list)
    removals: list[Removal] = field(default_factory=list)
    alive: list[int] = field(default_factory=list)

    @property
    def result(self) -> Word:
        return Word(tuple(self.input.letters[p - 1] for p in self.alive))

    @property
    def y(self) -> int:
        return max(self.survivors, default=0)


def _canon(letters: Sequence[Hashable]) -> tuple[int, ...]:
    seen: dict[Hashable, int] = {}
    return tuple(seen.setdefault(c, len(seen)) for c in letters)


def _smallest_copy(letters: Sequence[Hashable], pattern: tuple[int, ...]) -> tuple[int, ...] | None:
    """Lexicographically smallest index tuple of a copy of ``pattern`` ending at the last index."""
    m = len(pattern)
    last = len(letters) - 1
    if m > len(letters):
        return None
    if m == 1:
        return (last,)
    k_last = pattern[-1]
    target = letters[last]
    chosen: list[int] = []
    forward: dict[int, Hashable] = {k_last: target}
    backward: dict[Hashable, int] = {target: k_last}

    def rec(slot: int, start: int) -> bool:
        if slot == m - 1:
            return True
        need = pattern[slot]
        # leave room for the remaining slots before the anchor
        stop = last - (m - 1 - slot) + 1
        for i in range(start, stop):
            c = letters[i]
            bound = forward.get(need)
            if bound is not None:
                if bound != c:
                    continue
                chosen.append(i)
                if rec(slot + 1, i + 1):
                    return True
                chosen.pop()
            else:
                if c in backward:
                    continue
                forward[need] = c
                backward[c] = need
                chosen.append(i)
                if rec(slot + 1, i + 1):
                    return True
                chosen.pop()
                del forward[need]
                del backward[c]
        return False

    if rec(0, 0):
        return tuple(chosen) + (last,)
    return None


def _as_word(w) -> Word:
    if isinstance(w, Word):
        return w
    if isinstance(w, str):
        from .wordio import parse_word

        return parse_word(w)
    return Word(tuple(w))


def reduce(u, family: Iterable) -> PersecutionRun:
    """Run the persecution process over ``u`` and record every step."""
    u = _as_word(u)
    fam = tuple(_as_word(f) for f in family)
    if not fam or any(len(f) == 0 for f in fam):
        raise ValueError("family must be nonempty and contain only nonempty words")
    patterns = [_canon(f.letters) for f in fam]
    run = PersecutionRun(u, fam)
    alive: list[int] = []  # 0-based input positions of survivors
    letters: list[Hashable] = []
    for step, c in enumerate(u.letters, start=1):
        alive.append(step - 1)
        letters.append(c)
        best = None
        for idx, pat in enumerate(patterns):
            hit = _smallest_copy(letters, pat)
            if hit is not None and (best is None or hit < best[0]):
                best = (hit, idx)
        if best is not None:
            # the removed copy takes the newest letter with it, and the rest
            # was copy-free already, so one removal per step suffices
            hit, idx = best
            run.removals.append(Removal(step, tuple(alive[i] + 1 for i in hit), idx))
            drop = set(hit)
            alive = [p for i, p in enumerate(alive) if i not in drop]
            letters = [x for i, x in enumerate(letters) if i not in drop]
        run.survivors.append(len(alive))
    run.alive = [p + 1 for p in alive]
    return run


def y_stat(u, family: Iterable) -> int:
    """Largest number of survivors over all prefixes."""
    return reduce(u, family).y
