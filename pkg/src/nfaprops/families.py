"""Automata families whose shortest witnesses are known in closed form,
plus a seeded random NFA generator for cross-checking.

Every family is over a small fixed alphabet and is small enough to write out
state by state, which is what the builders below do.
"""
from __future__ import annotations

import random
from math import lcm

from .automaton import EPSILON, Automaton, Kind

AB = ("a", "b")
ABC = ("a", "b", "c")


def _complete(alphabet, n_states, trans, initial, finals) -> Automaton:
    """Add a sink for missing moves and return a complete DFA."""
    sink = n_states
    have = {(p, a) for p, a, _ in trans}
    trans = set(trans)
    for p in range(n_states + 1):
        for a in range(len(alphabet)):
            if (p, a) not in have:
                trans.add((p, a, sink))
    return Automaton(alphabet, n_states + 1, frozenset(trans), {initial}, finals, Kind.DFA)


def palindrome_family(t: int) -> Automaton:
    """Complete DFA for ``(a^t)+ b (a^(t-1))+``; ``2t+2`` states.

    The shortest palindrome is ``a^(t(t-1)) b a^(t(t-1))``.
    """
    if t < 2:
        raise ValueError("t must be at least 2")
    a, b = 0, 1
    # A_0..A_t count the first block (A_t: at least one full block read)
    # B_0..B_(t-1) the second one
    A = list(range(t + 1))
    B = [t + 1 + i for i in range(t)]
    trans = set()
    for i in range(t):
        trans.add((A[i], a, A[i + 1]))
    trans.add((A[t], a, A[1]))
    trans.add((A[t], b, B[0]))
    for i in range(t - 1):
        trans.add((B[i], a, B[i + 1]))
    trans.add((B[t - 1], a, B[1]))
    return _complete(AB, 2 * t + 1, trans, A[0], {B[t - 1]})


def nonpalindrome_family(n: int) -> Automaton:
    """``n``-state NFA for ``(a^(n-1) Σ)* a^(n-1)`` over ``{a, b}``.

    Its shortest non-palindrome has length ``3n - 1``.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    trans = {(i, 0, i + 1) for i in range(n - 1)}
    trans |= {(n - 1, 0, 0), (n - 1, 1, 0)}
    return Automaton(AB, n, frozenset(trans), {0}, {n - 1})


def block_family(periods) -> Automaton:
    """NFA for ``(a^p1)+ b (a^p2)+ b ... (a^pk)+ b``.

    A ``k``-power in it has the form ``(a^l b)^k`` with ``l`` divisible by
    every period, so the shortest is ``(a^lcm b)^k``.
    """
    periods = list(periods)
    if not periods or min(periods) < 1:
        raise ValueError("periods must be positive")
    trans = set()
    state = 0
    for m in periods:
        entry = state
        chain = [entry + 1 + i for i in range(m)]
        trans.add((entry, 0, chain[0]))
        for i in range(m - 1):
            trans.add((chain[i], 0, chain[i + 1]))
        trans.add((chain[-1], 0, chain[0]))
        state = chain[-1] + 1
        trans.add((chain[-1], 1, state))
    return Automaton(AB, state + 1, frozenset(trans), {0}, {state})


def lcm_power_family(n: int, k: int = 2) -> Automaton:
    """Periods ``n, n-1, ..., n-k+1``: shortest k-power ``(a^l b)^k`` with
    ``l = lcm(n, ..., n-k+1)``."""
    if k < 2 or n - k + 1 < 1:
        raise ValueError("need k >= 2 and n >= k")
    return block_family(range(n, n - k, -1))


def lcm_power_length(n: int, k: int = 2) -> int:
    return k * (lcm(*range(n, n - k, -1)) + 1)


def _primes(count):
    out = []
    c = 2
    while len(out) < count:
        if all(c % p for p in out):
            out.append(c)
        c += 1
    return out


def prime_power_family(k: int) -> Automaton:
    """Periods are the first ``k`` primes; the shortest power is
    ``(a^(p1...pk) b)^k``."""
    return block_family(_primes(k))


def late_nonpower_words(n: int) -> tuple[str, str]:
    u = "ab" * n + "a"
    x = u + u
    y = "ba" + x + "ab"
    return x, y


def late_nonpower_family(n: int) -> Automaton:
    """NFA for ``x (y x)*`` with ``x = ((ab)^n a)^2`` and ``y = ba x ab``.

    Written as the cycle ``(x y)* x`` of ``|xy| = 8n + 8`` states.  Every
    accepted word is a power except from ``xyxyx`` on; that word has length
    ``20n + 18``.
    """
    x, y = late_nonpower_words(n)
    cycle = x + y
    m = len(cycle)
    trans = frozenset((i, AB.index(cycle[i]), (i + 1) % m) for i in range(m))
    return Automaton(AB, m, trans, {0}, {len(x)})


def bordered_family(t: int) -> Automaton:
    """Complete DFA for ``a (b^t)+ c a (b^(t-1))+ c``; ``2t + 5`` states.

    The shortest bordered word is ``a b^(t(t-1)) c a b^(t(t-1)) c``.
    """
    if t < 2:
        raise ValueError("t must be at least 2")
    a, b, c = 0, 1, 2
    start = 0
    A = [1 + i for i in range(t + 1)]
    mid = t + 2
    B = [t + 3 + i for i in range(t)]
    end = 2 * t + 3
    trans = {(start, a, A[0])}
    for i in range(t):
        trans.add((A[i], b, A[i + 1]))
    trans.add((A[t], b, A[1]))
    trans.add((A[t], c, mid))
    trans.add((mid, a, B[0]))
    for i in range(t - 1):
        trans.add((B[i], b, B[i + 1]))
    trans.add((B[t - 1], b, B[1]))
    trans.add((B[t - 1], c, end))
    return _complete(ABC, 2 * t + 4, trans, start, {end})


def unbordered_family(n: int) -> Automaton:
    """``n``-state NFA for ``a b^(n-3) a b*``; the shortest unbordered word
    is ``a b^(n-3) a b^(n-2)`` of length ``2n - 3``."""
    if n < 4:
        raise ValueError("n must be at least 4")
    trans = {(0, 0, 1)}
    for i in range(1, n - 2):
        trans.add((i, 1, i + 1))
    trans.add((n - 2, 0, n - 1))
    trans.add((n - 1, 1, n - 1))
    return Automaton(AB, n, frozenset(trans), {0}, {n - 1})


def random_nfa(
    n: int,
    alphabet=AB,
    density: float = 0.3,
    rng: random.Random | int | None = None,
    epsilon: float = 0.0,
    final_prob: float = 0.35,
) -> Automaton:
    """Random automaton on ``n`` states with one initial state (state 0).

    Each possible transition is present with probability ``density`` and
    each epsilon move with probability ``epsilon``.
    """
    if not isinstance(rng, random.Random):
        rng = random.Random(rng)
    alphabet = tuple(alphabet)
    trans = set()
    for p in range(n):
        for q in range(n):
            for a in range(len(alphabet)):
                if rng.random() < density:
                    trans.add((p, a, q))
            if epsilon and p != q and rng.random() < epsilon:
                trans.add((p, EPSILON, q))
    finals = {q for q in range(n) if rng.random() < final_prob}
    return Automaton(alphabet, n, frozenset(trans), {0} if n else set(), finals)
