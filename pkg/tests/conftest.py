import itertools
import random

import pytest

from nfaprops.automaton import EPSILON, Automaton, prepare
from nfaprops.families import AB, random_nfa

# lines recorded by the acceptance tests, printed after the run
ACCEPTANCE_LINES = []


def naive_accepts(a, word):
    """Path search over (state, position) pairs; independent of the bitmask
    simulation in the library."""
    seen = set()
    stack = [(q, 0) for q in a.initials]
    while stack:
        q, i = stack.pop()
        if (q, i) in seen:
            continue
        seen.add((q, i))
        if i == len(word) and q in a.finals:
            return True
        for p, label, r in a.transitions:
            if p != q:
                continue
            if label == EPSILON:
                stack.append((r, i))
            elif i < len(word) and label == word[i]:
                stack.append((r, i + 1))
    return False


def all_words(n_symbols, max_len, min_len=0):
    for length in range(min_len, max_len + 1):
        yield from itertools.product(range(n_symbols), repeat=length)


def random_suite(count, max_states, seed, alphabet=AB, epsilon=0.0, trimmed=False, min_states=1):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(min_states, max_states)
        a = random_nfa(n, alphabet, density=rng.choice([0.15, 0.25, 0.35]), rng=rng, epsilon=epsilon)
        if trimmed:
            a = prepare(a)
            if a.n_states == 0:
                continue
        out.append(a)
    return out


def make(alphabet, n, trans, initials, finals, kind=None):
    return Automaton.build(alphabet, n, trans, initials, finals, kind)


@pytest.fixture
def ab():
    return AB


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
