"""Exit criteria. One test per criterion; the terminal summary prints PASS/FAIL lines.

Tolerances are fixed here and are not tuned after the fact.
"""

import math
import time
from collections import Counter
from fractions import Fraction

import numpy as np
from scipy.stats import chisquare

from oracles import dyck_paths, height
from sockmatch.cli import main
from sockmatch.core import DyckTrace, Word, trace_of, word_from_matching
from sockmatch.enumeration import exhaustive_means, iter_matchings, sock_distribution
from sockmatch.experiments import ExperimentSpec, run
from sockmatch.formulas import expected_xk, trace_multiplicity
from sockmatch.patterns import all_patterns, collectable_probe, r_partite_patterns, z_clique
from sockmatch.persecute import reduce, y_stat
from sockmatch.randgen import SeedSpec, random_dyck, random_r_matching
from sockmatch.sockproc import largest_bipartite_submatching, sock_number
from sockmatch.wordio import format_word, parse_word

MC_SAMPLES = 500
MC_N = 10_000
MC_WORKERS = 4


def _odd_double_factorial(n):
    return math.prod(range(1, 2 * n, 2))


def _catalan(n):
    return math.comb(2 * n, n) // (n + 1)


def test_c01_expected_average_r2_exact():
    t0 = time.perf_counter()
    for n in range(1, 8):
        assert exhaustive_means(n, 2)["avg"] == Fraction(2 * n + 1, 6)
    assert time.perf_counter() - t0 < 5


def test_c02_expected_average_r3_exact():
    t0 = time.perf_counter()
    r = 3
    for n in range(1, 5):
        assert exhaustive_means(n, r)["avg"] == Fraction((r - 1) * (r * n + 1), 2 * (r + 1))
    assert time.perf_counter() - t0 < 5


def test_c03_per_cut_expectation_exact():
    cases = [(n, 2) for n in range(1, 7)] + [(n, 3) for n in range(1, 5)]
    for n, r in cases:
        means = exhaustive_means(n, r)["xk"]
        for k in range(1, r * n + 1):
            closed = k - Fraction(r * math.comb(k, r), math.comb(r * n - 1, r - 1))
            assert means[k - 1] == closed == expected_xk(n, r, k)


def test_c04_sock_number_distribution():
    t0 = time.perf_counter()
    for n in range(2, 9):
        s = sock_distribution(n, 2).counts
        assert s[1] == 1
        assert s[2] == 3 ** (n - 1) - 1
        assert s[n - 1] == (n - 1) ** 2 * math.factorial(n - 1)
        assert s[n] == math.factorial(n)
        assert sum(s.values()) == _odd_double_factorial(n)
    assert time.perf_counter() - t0 < 60


def test_c05_trace_identities():
    for n in range(1, 8):
        paths = dyck_paths(n)
        assert len(paths) == _catalan(n)
        mult = {p: trace_multiplicity(DyckTrace(p)) for p in paths}
        assert sum(mult.values()) == _odd_double_factorial(n)
        traces = Counter(trace_of(m).steps for m in iter_matchings(n, 2))
        assert len(traces) == _catalan(n)
        assert dict(traces) == mult
        table = sock_distribution(n, 2)
        for j in range(1, n + 1):
            assert sum(c for p, c in mult.items() if height(p) <= j) == table.at_most(j)
    assert trace_multiplicity(DyckTrace((1, 1, 1, -1, 1, -1, -1, -1))) == 18


def test_c06_monte_carlo_concentration():
    t0 = time.perf_counter()
    checks = [
        ("avg", 2, 1 / 3, 0.01),
        ("max", 2, 1 / 2, 0.02),
        ("avg", 3, 3 / 4, 0.01),
        ("max", 3, 2 * math.sqrt(3) / 3, 0.02),
    ]
    for stat, r, center, tol in checks:
        s = run(ExperimentSpec(n=MC_N, r=r, samples=MC_SAMPLES, seed=42, statistic=stat), workers=MC_WORKERS)
        print(f"{stat} r={r}: mean/n = {s.mean / MC_N:.5f} (target {center:.5f} +- {tol})")
        assert abs(s.mean / MC_N - center) <= tol
    assert time.perf_counter() - t0 < 60


def test_c07_uniformity():
    samples = 150_000
    m_counts = Counter(random_r_matching(3, 2, SeedSpec(42, i)).blocks for i in range(samples))
    assert len(m_counts) == 15
    p_m = chisquare(list(m_counts.values())).pvalue
    d_counts = Counter(random_dyck(3, SeedSpec(43, i)).steps for i in range(samples))
    assert len(d_counts) == 5
    p_d = chisquare(list(d_counts.values())).pvalue
    print(f"matchings p={p_m:.4f}, dyck p={p_d:.4f}")
    assert p_m > 0.001
    assert p_d > 0.001


def test_c08_conditional_height():
    s = run(ExperimentSpec(n=MC_N, samples=MC_SAMPLES, seed=42, statistic="dyck-height"), workers=MC_WORKERS)
    root = math.sqrt(MC_N)
    print(f"mean Dyck height {s.mean:.2f}, band [{root:.0f}, {4 * root:.0f}]")
    assert root <= s.mean <= 4 * root
    assert s.mean < MC_N / 2


def test_c09_pattern_equivalences():
    for n in range(1, 7):
        for m in iter_matchings(n, 2):
            y = sock_number(m)
            assert z_clique(m, ["ABAB", "ABBA"]) == y == largest_bipartite_submatching(m)
    assert collectable_probe("AABABB", 3) is None
    q3 = r_partite_patterns(3)
    assert {p.word for p in q3} == {"ABABAB", "ABBAAB", "ABABBA", "ABBABA"}
    for p in q3:
        assert collectable_probe(p, 5) is not None
    assert sum(collectable_probe(p, 3) is not None for p in all_patterns(3)) == 9


def test_c10_persecution():
    run_ = reduce(parse_word("ABCADBCDA"), [parse_word("ABA")])
    assert format_word(run_.result) == "BDA"
    assert run_.y == 3
    for r, top in [(2, 6), (3, 3)]:
        fam = [Word((0,) * r)]
        for n in range(1, top + 1):
            for m in iter_matchings(n, r):
                assert y_stat(word_from_matching(m), fam) == sock_number(m)


def test_c11_thread_count_determinism(tmp_path):
    base = ["simulate", "--n", "2000", "--r", "3", "--samples", "64", "--statistic", "max", "--seed", "42"]
    outputs = []
    for threads in ("1", "8"):
        path = tmp_path / f"t{threads}.csv"
        code = main(base + ["--threads", threads, "--out", str(path), "--summary", str(tmp_path / "s.json")])
        assert code == 0
        outputs.append(path.read_bytes())
    assert outputs[0] == outputs[1]
    assert outputs[0].count(b"\n") == 65
    assert np.isfinite(float(outputs[0].splitlines()[1].split(b",")[1]))
