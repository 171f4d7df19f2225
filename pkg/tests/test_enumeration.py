from collections import Counter

import pytest

from oracles import all_matchings_by_permutation, all_matchings_recursive, pair_word
from sockmatch.core import OrderedMatching
from sockmatch.enumeration import (
    BudgetExceededError,
    SizeCapError,
    brute_max_subset,
    exhaustive_means,
    for_each_matching,
    iter_matchings,
    sock_distribution,
)
from sockmatch.formulas import closed_sock_counts, expected_avg, matching_count
from sockmatch.sockproc import sock_number


@pytest.mark.parametrize("n, r, count", [(3, 2, 15), (1, 2, 1), (1, 4, 1), (4, 3, 15400), (0, 2, 1)])
def test_counts(n, r, count):
    seen = []
    for_each_matching(n, r, seen.append)
    assert len(seen) == count == matching_count(n, r)
    assert len(set(seen)) == count


@pytest.mark.parametrize("n, r", [(1, 2), (2, 2), (3, 2), (4, 2), (2, 3)])
def test_matches_permutation_oracle(n, r):
    ours = {m.blocks for m in iter_matchings(n, r)}
    assert ours == all_matchings_by_permutation(n, r)


def test_canonical_order_first_block():
    first = next(iter(iter_matchings(3, 2)))
    assert first.blocks == ((1, 2), (3, 4), (5, 6))


def test_budget():
    with pytest.raises(BudgetExceededError):
        next(iter(iter_matchings(8, 2, budget=1000)))
    with pytest.raises(BudgetExceededError):
        sock_distribution(9, 2, budget=10**6)


@pytest.mark.parametrize(
    "n, expected",
    [
        (1, {1: 1}),
        (3, {1: 1, 2: 8, 3: 6}),
        (4, {1: 1, 2: 26, 3: 54, 4: 24}),
        (5, {1: 1, 2: 80, 3: 360, 4: 384, 5: 120}),
    ],
)
def test_sock_distribution(n, expected):
    assert sock_distribution(n).counts == expected


@pytest.mark.parametrize("n, r", [(n, 2) for n in range(1, 7)] + [(n, 3) for n in range(1, 5)] + [(3, 4)])
def test_sock_distribution_matches_direct_count(n, r):
    direct = Counter(sock_number(m) for m in iter_matchings(n, r))
    table = sock_distribution(n, r)
    assert table.counts == dict(direct)
    assert table.total() == matching_count(n, r)


def test_sock_distribution_workers_agree():
    assert sock_distribution(6, 2, workers=2).counts == sock_distribution(6, 2).counts
    assert sock_distribution(3, 3, workers=2).counts == sock_distribution(3, 3).counts


@pytest.mark.parametrize("n", range(2, 8))
def test_closed_forms_hold(n):
    table = sock_distribution(n)
    for j, s in closed_sock_counts(n).items():
        assert table.counts[j] == s


@pytest.mark.parametrize("n, r", [(4, 2), (5, 2), (3, 3)])
def test_exhaustive_mean_avg(n, r):
    assert exhaustive_means(n, r)["avg"] == expected_avg(n, r)


def no_alignment(e1, e2):
    return pair_word(e1, e2) != "AABB"


def test_brute_max_subset_examples():
    abbcac = OrderedMatching(2, ((1, 5), (2, 3), (4, 6)))
    assert brute_max_subset(abbcac, no_alignment) == 2
    aabb = OrderedMatching(2, ((1, 2), (3, 4)))
    assert brute_max_subset(aabb, lambda a, b: pair_word(a, b) == "ABAB") == 1
    bip = OrderedMatching(2, tuple((i, 6 + (i * 2) % 5) for i in range(1, 6)))
    assert brute_max_subset(bip, no_alignment) == 5


def test_brute_max_subset_cap():
    big = OrderedMatching(2, tuple((2 * i + 1, 2 * i + 2) for i in range(25)))
    with pytest.raises(SizeCapError):
        brute_max_subset(big, no_alignment)


def test_oracle_generators_agree():
    for n in range(1, 5):
        assert {tuple(b) for b in all_matchings_recursive(n, 2)} == all_matchings_by_permutation(n, 2)
