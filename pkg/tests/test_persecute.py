from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from sockmatch.core import Word, word_from_matching
from sockmatch.enumeration import iter_matchings
from sockmatch.persecute import reduce, y_stat
from sockmatch.randgen import SeedSpec, random_word
from sockmatch.sockproc import sock_number, sockuence
from sockmatch.wordio import format_word, parse_word


def canon(seq):
    seen = {}
    return tuple(seen.setdefault(c, len(seen)) for c in seq)


def brute_reduce(letters, family):
    """Unanchored reference: after every letter, delete the lexicographically
    smallest copy anywhere in the survivors, repeating until none is left."""
    pats = [canon(f) for f in family]
    alive = []
    survivors = []
    for i in range(len(letters)):
        alive.append(i)
        while True:
            best = None
            for idx, pat in enumerate(pats):
                for combo in combinations(range(len(alive)), len(pat)):
                    if canon([letters[alive[j]] for j in combo]) == pat:
                        if best is None or combo < best[0]:
                            best = (combo, idx)
                        break  # combinations are generated in lexicographic order
            if best is None:
                break
            drop = set(best[0])
            alive = [p for j, p in enumerate(alive) if j not in drop]
        survivors.append(len(alive))
    return [letters[p] for p in alive], survivors


def test_worked_example():
    run = reduce(parse_word("ABCADBCDA"), [parse_word("ABA")])
    assert format_word(run.result) == "BDA"
    assert run.y == 3
    assert [r.positions for r in run.removals] == [(1, 2, 4), (3, 5, 7)]
    assert [r.step for r in run.removals] == [4, 7]
    assert y_stat("ABCADBCDA", ["ABA"]) == 3


def test_no_copies_leaves_word():
    run = reduce("ABCDE", ["AA"])
    assert format_word(run.result) == "ABCDE"
    assert run.survivors == [1, 2, 3, 4, 5]
    assert run.removals == []


def test_single_letter_family():
    assert y_stat("ABCABBA", ["A"]) == 0


def test_rejects_empty_family():
    with pytest.raises(ValueError):
        reduce("AB", [])


def test_gauss_word_survivors_are_sockuence():
    for m in iter_matchings(4, 2):
        w = word_from_matching(m)
        assert reduce(w, [Word((0, 0))]).survivors == list(sockuence(m).xs)


@pytest.mark.parametrize("n, r", [(n, 2) for n in range(1, 7)] + [(n, 3) for n in range(1, 4)])
def test_y_equals_sock_number(n, r):
    fam = [Word((0,) * r)]
    for m in iter_matchings(n, r):
        assert y_stat(word_from_matching(m), fam) == sock_number(m)


families = st.lists(
    st.lists(st.integers(0, 2), min_size=1, max_size=4).map(tuple), min_size=1, max_size=3
)


@settings(max_examples=300, deadline=None)
@given(st.lists(st.integers(0, 3), max_size=14), families)
def test_matches_unanchored_reference(letters, family):
    run = reduce(Word(tuple(letters)), [Word(f) for f in family])
    result, survivors = brute_reduce(letters, family)
    assert list(run.result.letters) == result
    assert run.survivors == survivors


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**31), st.integers(1, 60), st.integers(2, 4))
def test_prefix_consistency(seed, n, k):
    w = random_word(n, k, SeedSpec(seed, 0))
    fam = ["ABA", "AA"] if k > 2 else ["ABBA"]
    full = reduce(w, fam)
    for i in range(0, n + 1, 7):
        part = reduce(Word(w.letters[:i]), fam)
        assert part.survivors == full.survivors[:i]
    assert full.y == max(full.survivors, default=0)
    assert all(s >= 0 for s in full.survivors)
    if full.survivors:
        assert full.survivors[-1] == len(full.result)
    for rm in full.removals:
        assert list(rm.positions) == sorted(set(rm.positions))
