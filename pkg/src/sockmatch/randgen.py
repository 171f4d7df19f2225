"""Seeded sampling of r-matchings, Dyck sequences and random words.

Stream derivation: sample ``i`` under master seed ``s`` draws from
``numpy.random.Generator(PCG64(SeedSequence(s, spawn_key=(i,))))``. The map
depends only on ``(s, i)``, so samples can be produced in any order by any
number of workers and still agree bit for bit.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .core import DyckTrace, OrderedMatching, Word


@dataclass(frozen=True)
class SeedSpec:
    master_seed: int = 42
    stream_index: int = 0

    def generator(self) -> np.random.Generator:
        ss = np.random.SeedSequence(self.master_seed, spawn_key=(self.stream_index,))
        return np.random.Generator(np.random.PCG64(ss))

    def stream(self, index: int) -> "SeedSpec":
        return SeedSpec(self.master_seed, index)


def _rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    if isinstance(seed, SeedSpec):
        return seed.generator()
    return SeedSpec(int(seed)).generator()


def random_blocks(n: int, r: int, seed) -> np.ndarray:
    """Uniform r-matching as an ``(n, r)`` array of 0-based positions.

    A uniform permutation of ``range(r*n)`` is cut into consecutive r-blocks;
    each matching arises from exactly ``r!^n n!`` permutations. Rows are not
    sorted.
    """
    perm = _rng(seed).permutation(r * n)
    return perm.reshape(n, r)


def random_r_matching(n: int, r: int, seed=SeedSpec()) -> OrderedMatching:
    blocks = random_blocks(n, r, seed) + 1
    return OrderedMatching(r, tuple(tuple(int(p) for p in row) for row in blocks))


def random_dyck_steps(n: int, seed) -> np.ndarray:
    """Uniform Dyck sequence of length 2n as an int8 array (cycle lemma).

    Shuffle n up-steps and n+1 down-steps, rotate so the walk starts right
    after the first time it attains its overall minimum, and drop the final
    down-step. Each Dyck sequence has exactly 2n+1 preimages.
    """
    steps = np.concatenate([np.ones(n, dtype=np.int8), -np.ones(n + 1, dtype=np.int8)])
    steps = _rng(seed).permutation(steps)
    prefix = np.cumsum(steps, dtype=np.int64)
    start = int(np.argmin(prefix)) + 1  # first index attaining the minimum
    rotated = np.roll(steps, -start)
    return rotated[:-1]


def random_dyck(n: int, seed=SeedSpec()) -> DyckTrace:
    return DyckTrace(tuple(int(s) for s in random_dyck_steps(n, seed)))


def random_word_array(n: int, k: int, seed) -> np.ndarray:
    if k < 1:
        raise ValueError("alphabet size must be at least 1")
    return _rng(seed).integers(0, k, size=n)


def random_word(n: int, k: int, seed=SeedSpec()) -> Word:
    """Word of length n with letters i.i.d. uniform over ``range(k)``."""
    return Word(tuple(int(c) for c in random_word_array(n, k, seed)))


def matching_with_trace(t: DyckTrace, variant: str = "crossing-free") -> OrderedMatching:
    """The unique crossing-free (stack) or nesting-free (queue) matching with trace ``t``."""
    if variant not in ("crossing-free", "nesting-free"):
        raise ValueError(f"unknown variant {variant!r}")
    lifo = variant == "crossing-free"
    open_: deque[int] = deque()
    blocks = []
    for pos, s in enumerate(t.steps, start=1):
        if s == 1:
            open_.append(pos)
        else:
            left = open_.pop() if lifo else open_.popleft()
            blocks.append((left, pos))
    return OrderedMatching(2, tuple(blocks))
