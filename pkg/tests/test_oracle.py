import pytest

from conftest import all_words, make, naive_accepts, random_suite
from nfaprops.automaton import from_words, prepare, universal
from nfaprops.boolmat import word_matrix
from nfaprops.errors import CapExceeded
from nfaprops.families import AB, nonpalindrome_family
from nfaprops.oracle import (
    PREDICATES,
    decision_bound,
    exact_bordered,
    exact_ge_k_powers,
    exact_k_powers,
    exact_nonpalindromes,
    exact_palindromes,
    exact_pattern,
    oracle_count_per_length,
    oracle_decide,
    relation_representatives,
    word_predicate,
)
from nfaprops.words import is_bordered, is_k_power, is_palindrome, primitivity

SUITE = random_suite(50, 3, 61) + random_suite(20, 3, 62, epsilon=0.25)


def brute(a, lo, hi, pred):
    return [w for w in all_words(a.n_symbols, hi, lo) if pred(w) and naive_accepts(a, w)]


def test_oracle_decide_returns_first_word():
    a = nonpalindrome_family(3)
    r = oracle_decide(a, "non-palindrome", 8)
    assert r.holds and len(r.witness) == 8 and r.exhaustive
    r = oracle_decide(a, "non-palindrome", 7)
    assert not r.holds and not r.exhaustive
    assert oracle_decide(a, "pattern", 5, pattern=(1, 1)).witness == (0, 0)


def test_oracle_cap_and_errors():
    with pytest.raises(CapExceeded):
        oracle_decide(universal(AB), "pattern", 6, pattern=(1,) * 7, cap=3)
    with pytest.raises(ValueError):
        oracle_decide(universal(AB), "palindrome", -1)
    with pytest.raises(ValueError):
        word_predicate("k-power")
    with pytest.raises(ValueError):
        word_predicate("squarefree")


def test_every_predicate_has_a_test():
    for name in PREDICATES:
        f = word_predicate(name, k=2, pattern=(1, 2, 1))
        assert isinstance(f((0, 1, 0)), bool)
    assert decision_bound("pattern", 3) is None
    assert decision_bound("palindrome", 3) == 17
    assert decision_bound("k-power", 2, 3) == 24


@pytest.mark.parametrize("a", SUITE)
def test_counts_match_brute_force(a):
    counts = dict(oracle_count_per_length(a, 6))
    for length in range(7):
        assert counts[length] == len(brute(a, length, length, lambda w: True))


@pytest.mark.parametrize("a", SUITE)
def test_exact_existence_against_enumeration(a):
    n = prepare(a).n_states
    top = 10
    checks = [
        (exact_palindromes(a), is_palindrome, 2 * n * n - 1),
        (exact_nonpalindromes(a), lambda w: not is_palindrome(w), 3 * n - 1),
        (exact_k_powers(a, 2), lambda w: len(w) > 0 and is_k_power(w, 2), 2 * n * n),
        (exact_ge_k_powers(a, 2), lambda w: len(w) > 0 and primitivity(w).exponent >= 2, None),
        (exact_bordered(a), is_bordered, 2 * n * n + n - 1),
    ]
    for (exists, infinite), pred, bound in checks:
        seen = brute(a, 0, top, pred)
        if seen:
            assert exists
        elif bound is not None and bound <= top:
            assert not exists
        if infinite:
            assert exists


def test_exact_on_known_languages():
    abstar = make("ab", 2, [(0, "a", 1), (1, "b", 1)], {0}, {1})
    assert exact_palindromes(abstar) == (True, False)
    assert exact_nonpalindromes(abstar) == (True, True)
    assert exact_bordered(abstar) == (False, False)
    sq = from_words([(0, 0), (0, 1, 0, 1)], AB)
    assert exact_k_powers(sq, 2) == (True, False)
    assert exact_k_powers(sq, 3) == (False, False)
    assert exact_ge_k_powers(universal(AB), 5) == (True, True)


@pytest.mark.parametrize("a", SUITE[:30])
def test_relation_representatives(a):
    p = prepare(a)
    reps = relation_representatives(p)
    if p.n_states == 0:
        return
    mats = {word_matrix(p, w) for w in all_words(2, 5, 1)}
    # every short word's relation is represented (after mapping to matrices)
    rep_mats = {word_matrix(p, w) for w in reps.values()}
    assert mats <= rep_mats


def test_exact_pattern():
    a = from_words([(0, 1, 1, 0)], AB)
    assert exact_pattern(a, (1, 2, 2, 1)) == (0, 1, 1, 0)
    assert exact_pattern(a, (1, 1)) is None
