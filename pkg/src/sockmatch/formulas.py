"""Closed forms and recurrences, all in exact arithmetic.

Only ``asymptotic_max`` and ``ExpectationProfile.R`` are floats; the constant
``(r-1)/r^(1/(r-1))`` is irrational for r > 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .core import DyckTrace


def binom(a: int, b: int) -> int:
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)


def falling(x: int, k: int) -> int:
    """Falling factorial x(x-1)...(x-k+1); zero when k > x >= 0."""
    out = 1
    for i in range(k):
        out *= x - i
    return out


def matching_count(n: int, r: int = 2) -> int:
    """Number of r-matchings of [rn]: (rn)! / (r!^n n!)."""
    return math.factorial(r * n) // (math.factorial(r) ** n * math.factorial(n))


def double_factorial_odd(n: int) -> int:
    """(2n-1)!! with the convention (-1)!! = 1."""
    out = 1
    for k in range(1, 2 * n, 2):
        out *= k
    return out


def catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


def expected_xk(n: int, r: int, k: int) -> Fraction:
    """E[x_k] over a uniform r-matching: k - r*C(k,r)/C(rn-1,r-1)."""
    if not 1 <= k <= r * n:
        raise ValueError(f"cut k={k} outside 1..{r * n}")
    return k - Fraction(r * binom(k, r), binom(r * n - 1, r - 1))


def expected_avg(n: int, r: int = 2) -> Fraction:
    """E of the sockuence average: (r-1)(rn+1) / (2(r+1))."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return Fraction((r - 1) * (r * n + 1), 2 * (r + 1))


def expected_avg_length(n: int, r: int = 2) -> Fraction:
    return r * expected_avg(n, r)


def argmax_cut(n: int, r: int = 2) -> int:
    """Ceiling of r^((r-2)/(r-1)) * n, the maximiser of the continuous profile."""
    if r == 2:
        return n
    x0 = r ** ((r - 2) / (r - 1)) * n
    k0 = math.ceil(x0)
    # guard against float noise when x0 is an integer
    if abs(x0 - round(x0)) < 1e-9:
        k0 = round(x0)
    return max(1, min(k0, r * n - 1))


def asymptotic_max_constant(r: int) -> float:
    return (r - 1) / r ** (1 / (r - 1))


def asymptotic_max(n: int, r: int = 2) -> float:
    return asymptotic_max_constant(r) * n


@dataclass(frozen=True)
class ExpectationProfile:
    n: int
    r: int
    values: tuple[Fraction, ...]  # E[x_k] for k = 1 .. rn-1
    k0: int
    R: float

    @classmethod
    def compute(cls, n: int, r: int = 2) -> "ExpectationProfile":
        vals = tuple(expected_xk(n, r, k) for k in range(1, r * n))
        return cls(n, r, vals, argmax_cut(n, r), asymptotic_max_constant(r))

    def exact_argmax(self) -> int:
        best = max(self.values)
        return self.values.index(best) + 1


def dyck_count_height_leq(n: int, j: int) -> int:
    """Dyck sequences of length 2n with height at most j (transfer recurrence)."""
    if n < 0 or j < 0:
        return 0
    j = min(j, n)
    row = [1] + [0] * j  # row[h] = number of valid prefixes ending at height h
    for _ in range(2 * n):
        nxt = [0] * (j + 1)
        for h, c in enumerate(row):
            if not c:
                continue
            if h + 1 <= j:
                nxt[h + 1] += c
            if h >= 1:
                nxt[h - 1] += c
        row = nxt
    return row[0]


def trace_multiplicity(t: DyckTrace) -> int:
    """Number of matchings with Dyck trace ``t``.

    Each down-run of length r_i picks, in order, which of the currently open
    left ends it closes: (open)_(r_i) choices.
    """
    runs = t.runs()
    total = 1
    open_ = 0
    for i in range(0, len(runs), 2):
        open_ += runs[i]
        down = runs[i + 1]
        total *= falling(open_, down)
        open_ -= down
    return total


def closed_sock_counts(n: int) -> dict[int, int]:
    """The s_j(n) values with closed forms (r = 2): j in {1, 2, n-1, n}."""
    if n < 1:
        raise ValueError("n must be at least 1")
    out = {1: 1}
    if n >= 2:
        out[2] = 3 ** (n - 1) - 1
        out[n - 1] = (n - 1) ** 2 * math.factorial(n - 1)
    out[n] = math.factorial(n)
    return dict(sorted(out.items()))
