import pytest

from conftest import all_words, make, naive_accepts, random_suite
from nfaprops.automaton import (
    EPSILON,
    Automaton,
    Kind,
    accepts,
    eliminate_epsilon,
    empty_automaton,
    enumerate_words,
    explore,
    from_words,
    is_empty,
    is_infinite,
    iter_words,
    length_window,
    prepare,
    product,
    shortest_word,
    strongly_connected_components,
    trim,
    universal,
    words_of_length,
)
from nfaprops.errors import AlphabetMismatch, CapExceeded, InvalidAutomaton, StateBudgetExceeded
from nfaprops.families import AB

EPS_SUITE = random_suite(60, 4, 7, epsilon=0.2)


def brute_language(a, max_len):
    return [w for w in all_words(a.n_symbols, max_len) if naive_accepts(a, w)]


def test_build_by_names_and_epsilon():
    a = make("ab", 3, [(0, "a", 1), (1, None, 2), (2, "-", 0)], {0}, {2})
    assert a.kind is Kind.NFA_EPSILON
    assert a.word("aa") == (0, 0)
    assert accepts(a, a.word("a")) and accepts(a, a.word("aa"))
    assert not accepts(a, ())
    assert a.render((0, 1)) == "ab"


def test_validation():
    with pytest.raises(InvalidAutomaton):
        Automaton(AB, 1, frozenset({(0, 0, 1)}), {0}, set())
    with pytest.raises(InvalidAutomaton):
        Automaton(("a", "a"), 1)
    with pytest.raises(InvalidAutomaton):
        make("ab", 2, [(0, "c", 1)], {0}, {1})
    with pytest.raises(InvalidAutomaton):
        make("ab", 1, [(0, "a", 0)], {0}, {0}, Kind.DFA)  # not total
    with pytest.raises(InvalidAutomaton):
        Automaton(AB, 1, frozenset({(0, EPSILON, 0)}), {0}, {0}, Kind.NFA)
    dfa = make("ab", 1, [(0, "a", 0), (0, "b", 0)], {0}, {0}, "dfa")
    assert dfa.kind is Kind.DFA


def test_word_conversion_errors():
    a = universal(("x", "yy"))
    assert a.word("x yy x") == (0, 1, 0)
    assert a.render((0, 1)) == "x yy"
    with pytest.raises(ValueError):
        a.word("z")


@pytest.mark.parametrize("a", EPS_SUITE)
def test_epsilon_elimination_and_trim_preserve_language(a):
    want = brute_language(a, 6)
    for b in (eliminate_epsilon(a), trim(a), prepare(a)):
        assert brute_language(b, 6) == want
    p = prepare(a)
    assert not p.has_epsilon
    assert p.n_states <= a.n_states


@pytest.mark.parametrize("a", EPS_SUITE[:30])
def test_enumeration_matches_brute_force(a):
    want = brute_language(a, 6)
    assert list(iter_words(a, 0, 6)) == want
    assert list(words_of_length(a, 4)) == [w for w in want if len(w) == 4]


@pytest.mark.parametrize("a", EPS_SUITE)
def test_shortest_word_is_least(a):
    want = brute_language(a, 2 * a.n_states + 1)
    v = shortest_word(a)
    if not want:
        assert not v.holds
    else:
        assert v.holds and v.witness == want[0]
    nonempty = [w for w in want if w]
    v1 = shortest_word(a, nonempty=True)
    assert v1.witness == (nonempty[0] if nonempty else None)


@pytest.mark.parametrize("a", EPS_SUITE)
def test_emptiness_and_infiniteness(a):
    n = a.n_states
    lang = brute_language(a, 2 * n)
    assert is_empty(a).holds == bool(lang)
    long = [w for w in lang if n <= len(w) < 2 * n]
    assert is_infinite(a).holds == bool(long)


def test_product_intersection():
    suite = random_suite(30, 3, 11, epsilon=0.2)
    for a, b in zip(suite, suite[1:]):
        c = product(a, b)
        assert brute_language(c, 6) == [w for w in brute_language(a, 6) if naive_accepts(b, w)]
    with pytest.raises(AlphabetMismatch):
        product(universal("ab"), universal("abc"))


def test_product_of_dfas_stays_dfa():
    w = length_window(2, 3, AB)
    assert w.kind is Kind.DFA
    assert product(w, length_window(0, 5, AB)).kind in (Kind.DFA, Kind.NFA)
    assert [len(x) for x in iter_words(w, 0, 5)] == [2] * 4 + [3] * 8


def test_builders():
    assert not is_empty(empty_automaton(AB)).holds
    f = from_words([(0, 1), (1,), ()], AB)
    assert list(iter_words(f, 0, 4)) == [(), (1,), (0, 1)]
    assert is_infinite(universal(AB)).holds and not is_infinite(f).holds
    with pytest.raises(ValueError):
        length_window(3, 2, AB)


def test_enumerate_cap():
    assert len(enumerate_words(universal(AB), 0, 3)) == 15
    with pytest.raises(CapExceeded):
        enumerate_words(universal(AB), 0, 5, cap=10)
    with pytest.raises(ValueError):
        enumerate_words(universal(AB), 3, 2)


def test_scc():
    comp = strongly_connected_components(5, [[1], [2], [0], [4], []])
    assert comp[0] == comp[1] == comp[2]
    assert len({comp[0], comp[3], comp[4]}) == 3


def test_explore_counter():
    # words over {a} counted mod 3, accepting 0 mod 3
    a = explore(("a",), None, None, [0], lambda s: [(0, (s + 1) % 3)], lambda s: s == 0)
    assert a.n_states == 4
    assert [len(w) for w in iter_words(a, 0, 7)] == [0, 3, 6]
    with pytest.raises(StateBudgetExceeded):
        explore(("a",), 10, None, [0], lambda s: [(0, s + 1)], lambda s: False, budget=5)
    b, ids = explore(("a",), 5, lambda s: s + 1, [0], lambda s: [(0, s + 1)] if s < 3 else [], lambda s: s == 3, with_ids=True)
    assert b.n_states == 5 and ids[3] == 4
    assert list(iter_words(b, 0, 5)) == [(0, 0, 0)]
