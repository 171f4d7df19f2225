"""Seeded Monte Carlo runs checked against tolerance bands.

The concentration results being checked are asymptotic (a.a.s.) statements
with unspecified constants, so every band here is an engineering tolerance.
Sample ``i`` always uses stream ``(seed, i)``; the worker count never changes
the per-sample values.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, replace
from fractions import Fraction
from typing import Sequence

import numpy as np

from .formulas import asymptotic_max_constant
from .patterns import z_clique
from .persecute import y_stat
from .randgen import SeedSpec, random_blocks, random_dyck_steps, random_r_matching, random_word

STATISTICS = ("avg", "max", "dyck-height", "clique", "persecute")


@dataclass(frozen=True)
class ExperimentSpec:
    n: int
    r: int = 2
    samples: int = 100
    seed: int = 42
    statistic: str = "avg"
    patterns: tuple[str, ...] = ()  # clique statistic
    family: tuple[str, ...] = ()  # persecute statistic
    k: int = 2  # alphabet size for persecute
    center: float | None = None
    halfwidth: float | None = None
    scale: str | None = None  # "n", "sqrt_n" or "1"

    def __post_init__(self):
        if self.statistic not in STATISTICS:
            raise ValueError(f"unknown statistic {self.statistic!r}; choose from {STATISTICS}")
        if self.samples < 1:
            raise ValueError("samples must be at least 1")
        if self.statistic == "clique" and not self.patterns:
            raise ValueError("clique statistic needs at least one pattern")
        if self.statistic == "persecute" and not self.family:
            raise ValueError("persecute statistic needs a family")

    def band(self) -> tuple[float | None, float | None, str]:
        """(center, halfwidth, scale), filling statistic-specific defaults."""
        center, half, scale = default_band(self.statistic, self.r)
        if self.center is not None:
            center = self.center
        if self.halfwidth is not None:
            half = self.halfwidth
        if self.scale is not None:
            scale = self.scale
        return center, half, scale


def default_band(statistic: str, r: int) -> tuple[float | None, float | None, str]:
    if statistic == "avg":
        return (r - 1) * r / (2 * (r + 1)), 0.01, "n"
    if statistic == "max":
        return asymptotic_max_constant(r), 0.02, "n"
    if statistic == "dyck-height":
        return 2.5, 1.5, "sqrt_n"  # [sqrt n, 4 sqrt n]
    if statistic == "clique":
        return 2.25, 1.75, "sqrt_n"  # [0.5 sqrt n, 4 sqrt n]
    return None, None, "1"


def _scale_value(scale: str, n: int) -> float:
    if scale == "n":
        return float(n)
    if scale == "sqrt_n":
        return math.sqrt(n)
    if scale == "1":
        return 1.0
    raise ValueError(f"unknown scale {scale!r}")


@dataclass
class RunSummary:
    spec: ExperimentSpec
    values: list = field(repr=False)
    mean: float
    variance: float
    min: float
    max: float
    center: float | None
    halfwidth: float | None
    scale: str
    passed: bool

    @property
    def std(self) -> float:
        return math.sqrt(self.variance)

    @property
    def scaled_mean(self) -> float:
        return self.mean / _scale_value(self.scale, self.spec.n)

    def to_record(self) -> dict:
        s = self.spec
        return {
            "n": s.n,
            "r": s.r,
            "samples": s.samples,
            "seed": s.seed,
            "statistic": s.statistic,
            "mean": self.mean,
            "std": self.std,
            "min": self.min,
            "max": self.max,
            "scale": self.scale,
            "scaled_mean": self.scaled_mean,
            "center": self.center,
            "halfwidth": self.halfwidth,
            "pass": self.passed,
        }

    def sample_rows(self) -> list[dict]:
        return [{"sample_index": i, "value": v} for i, v in enumerate(self.values)]


def sock_stats(blocks: np.ndarray, r: int) -> tuple[int, int]:
    """(sum of the sockuence, its maximum) for an ``(n, r)`` array of 0-based positions."""
    n = blocks.shape[0]
    if n == 0:
        return 0, 0
    size = r * n
    done = np.bincount(blocks.max(axis=1), minlength=size).cumsum()
    xs = np.arange(1, size + 1, dtype=np.int64) - r * done
    return int(xs.sum()), int(xs.max())


def sample_value(spec: ExperimentSpec, index: int):
    """The statistic for sample ``index``; exact (int or Fraction) where possible."""
    seed = SeedSpec(spec.seed, index)
    n, r = spec.n, spec.r
    st = spec.statistic
    if st in ("avg", "max"):
        total, y = sock_stats(random_blocks(n, r, seed), r)
        return Fraction(total, r * n) if st == "avg" else y
    if st == "dyck-height":
        steps = random_dyck_steps(n, seed)
        return int(np.cumsum(steps, dtype=np.int64).max()) if n else 0
    if st == "clique":
        return z_clique(random_r_matching(n, r, seed), spec.patterns)
    return y_stat(random_word(n, spec.k, seed), spec.family)


def _chunk(args) -> list:
    spec, lo, hi = args
    return [sample_value(spec, i) for i in range(lo, hi)]


def collect(spec: ExperimentSpec, workers: int = 1) -> list:
    if workers <= 1:
        return _chunk((spec, 0, spec.samples))
    step = max(1, math.ceil(spec.samples / (4 * workers)))
    jobs = [(spec, lo, min(lo + step, spec.samples)) for lo in range(0, spec.samples, step)]
    out: list = []
    with ProcessPoolExecutor(max_workers=workers) as ex:
        for part in ex.map(_chunk, jobs):
            out.extend(part)
    return out


def summarize(spec: ExperimentSpec, values: Sequence) -> RunSummary:
    arr = np.array([float(v) for v in values], dtype=np.float64)
    mean = float(arr.mean())
    var = float(arr.var(ddof=1)) if len(arr) > 1 else 0.0
    center, half, scale = spec.band()
    if center is None or half is None:
        passed = True
    else:
        passed = abs(mean / _scale_value(scale, spec.n) - center) <= half
    return RunSummary(spec, list(values), mean, var, float(arr.min()), float(arr.max()), center, half, scale, passed)


def run(spec: ExperimentSpec, workers: int = 1) -> RunSummary:
    return summarize(spec, collect(spec, workers))


def sweep(template: ExperimentSpec, grid: Sequence[int], workers: int = 1) -> list[RunSummary]:
    if not grid:
        raise ValueError("empty n-grid")
    return [run(replace(template, n=n), workers) for n in grid]


def spec_dict(spec: ExperimentSpec) -> dict:
    return asdict(spec)
