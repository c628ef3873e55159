import pytest

from conftest import all_words, make, naive_accepts, random_suite
from nfaprops.automaton import from_words, prepare, universal
from nfaprops.borders import (
    accepts_bordered,
    accepts_infinitely_many_bordered,
    accepts_infinitely_many_unbordered,
    accepts_unbordered,
    build_border_root,
    connecting_words,
    unbordered_window,
)
from nfaprops.errors import SearchBudgetExceeded
from nfaprops.families import AB, bordered_family, unbordered_family
from nfaprops.oracle import exact_bordered
from nfaprops.words import is_bordered, is_unbordered

SUITE = random_suite(80, 4, 51) + random_suite(30, 4, 52, epsilon=0.2)


def brute(a, max_len, pred):
    return [w for w in all_words(a.n_symbols, max_len, 1) if pred(w) and naive_accepts(a, w)]


@pytest.mark.parametrize("t", [2, 3, 4])
def test_bordered_family(t):
    a = bordered_family(t)
    assert a.n_states == 2 * t + 5
    v = accepts_bordered(a)
    block = (1,) * (t * (t - 1))
    assert v.witness == (0,) + block + (2, 0) + block + (2,)
    assert is_bordered(v.witness)


def test_border_root_language():
    # the root accepts non-empty u iff u w u is accepted for some w
    for a in random_suite(15, 3, 53):
        p = prepare(a)
        if p.n_states == 0:
            continue
        root = build_border_root(p)
        for u in all_words(2, 3, 1):
            expect = any(naive_accepts(p, u + w + u) for w in all_words(2, 2 * p.n_states))
            assert naive_accepts(root.inner, u) == expect


def test_connecting_words_are_least():
    a = make("ab", 3, [(0, "b", 1), (0, "a", 2), (2, "a", 1)], {0}, {1})
    reach, link = connecting_words(a)
    assert link[0][1] == (1,)
    assert link[0][2] == (0,)
    assert reach[1] == 0b010


@pytest.mark.parametrize("a", SUITE)
def test_shortest_bordered(a):
    n = prepare(a).n_states
    found = brute(a, min(2 * n * n + n - 1, 11), is_bordered)
    v = accepts_bordered(a)
    exists, infinite = exact_bordered(a)
    assert v.holds == exists
    if found:
        assert v.witness is not None and len(v.witness) == len(found[0])
    if v.holds:
        assert is_bordered(v.witness) and naive_accepts(a, v.witness)
    assert accepts_infinitely_many_bordered(a).holds == infinite


@pytest.mark.parametrize("a", SUITE)
def test_shortest_unbordered(a):
    n = prepare(a).n_states
    found = brute(a, min(6 * n + 1, 11), is_unbordered)
    v = accepts_unbordered(a)
    if found:
        assert v.witness == found[0]
    elif 6 * n + 1 <= 11:
        assert not v.holds


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_unbordered_family(n):
    v = accepts_unbordered(unbordered_family(n))
    assert v.witness == (0,) + (1,) * (n - 3) + (0,) + (1,) * (n - 2)
    assert accepts_infinitely_many_unbordered(unbordered_family(n)).holds


def test_infinitely_many_unbordered_examples():
    ab_star = make("ab", 2, [(0, "a", 1), (1, "b", 1)], {0}, {1})
    assert accepts_infinitely_many_unbordered(ab_star).holds
    a_star = make("ab", 1, [(0, "a", 0)], {0}, {0})
    assert accepts_unbordered(a_star).witness == (0,)
    assert not accepts_infinitely_many_unbordered(a_star).holds
    # (ab)* is infinite but only "ab" is unbordered
    ab_loop = make("ab", 2, [(0, "a", 1), (1, "b", 0)], {0}, {0})
    assert not accepts_infinitely_many_unbordered(ab_loop).holds
    assert not accepts_infinitely_many_unbordered(from_words([(0, 1)], AB)).holds


def test_window():
    assert unbordered_window(1) == (12, 31)
    lo, hi = unbordered_window(3)
    assert lo < hi


def test_search_cap():
    a_star = make("ab", 1, [(0, "a", 0)], {0}, {0})
    with pytest.raises(SearchBudgetExceeded) as info:
        accepts_infinitely_many_unbordered(a_star, cap=3)
    assert info.value.covered == "lengths 12..14"
    with pytest.raises(SearchBudgetExceeded) as info:
        accepts_unbordered(universal(AB), cap=0)
    assert info.value.covered == "none"


def test_empty_language():
    empty = from_words([], AB)
    assert not accepts_bordered(empty).holds
    assert not accepts_infinitely_many_bordered(empty).holds
    assert not accepts_unbordered(empty).holds
