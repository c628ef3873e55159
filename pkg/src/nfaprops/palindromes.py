"""Palindromes and non-palindromes in the language of an automaton.

The central object is the *palindrome root*: an automaton on pairs of states
that runs the input forward from an initial state and backward from a final
state at the same time.  It accepts ``x`` exactly when ``x x^R`` or
``x c x^R`` (for a single symbol ``c``) is accepted by the original machine.
"""
from __future__ import annotations

from dataclasses import dataclass, replace

from .automaton import (
    Automaton,
    Kind,
    PropertyVerdict,
    accessible,
    coaccessible,
    explore,
    is_infinite,
    predecessors,
    prepare,
    product,
    shortest_word,
)
from .errors import EpsilonNotSupported, NotADfa, UnaryAlphabet


@dataclass(frozen=True)
class PalRootAutomaton:
    """Pair construction for palindromes.

    ``inner`` numbers the pair ``[p, q]`` as ``1 + p*n + q`` and uses ``0`` as
    the fresh start.  ``diagonal`` holds the final states ``[p, p]``;
    ``bridge`` maps each final ``[p, q]`` with ``q`` in ``delta(p, c)`` to the
    least such ``c``.
    """

    inner: Automaton
    source_n: int
    diagonal: frozenset
    bridge: dict


def _pair_id(n):
    return lambda pq: 1 + pq[0] * n + pq[1]


def build_pal_root(a: Automaton) -> PalRootAutomaton:
    if a.has_epsilon:
        raise EpsilonNotSupported("eliminate epsilon moves before building the palindrome root")
    n = a.n_states
    pred = predecessors(a)
    delta = a.delta
    bridge = {}
    diagonal = set()
    encode = _pair_id(n)
    for p in range(n):
        diagonal.add(encode((p, p)))
        for c in range(a.n_symbols):
            for q in delta[p][c]:
                bridge.setdefault(encode((p, q)), c)

    def moves(pq):
        p, q = pq
        for c in range(a.n_symbols):
            for r in delta[p][c]:
                for s in pred[q][c]:
                    yield c, (r, s)

    seeds = [(i, f) for i in sorted(a.initials) for f in sorted(a.finals)]
    finals = diagonal | set(bridge)
    inner = explore(a.alphabet, n * n + 1, encode, seeds, moves, lambda pq: encode(pq) in finals)
    return PalRootAutomaton(inner, n, frozenset(diagonal), bridge)


def _root_of(a: Automaton) -> tuple[Automaton, PalRootAutomaton]:
    p = prepare(a)
    return p, build_pal_root(p)


def accepts_palindrome(a: Automaton) -> PropertyVerdict:
    """Shortest accepted palindrome (least in lexicographic order among the
    shortest), found through the palindrome root."""
    p, root = _root_of(a)
    n = p.n_states
    bound = max(2 * n * n - 1, 0)
    if a.n_symbols == 1:
        found = shortest_word(p)
        return PropertyVerdict(found.holds, found.witness, bound, "unary")
    inner = root.inner
    candidates = []
    even_finals = inner.finals & root.diagonal
    odd_finals = inner.finals & frozenset(root.bridge)
    even = shortest_word(replace(inner, finals=even_finals))
    if even.holds:
        x = even.witness
        candidates.append(x + x[::-1])
    odd = shortest_word(replace(inner, finals=odd_finals))
    if odd.holds:
        x = odd.witness
        reached = inner.run(x)
        c = min(root.bridge[q] for q in odd_finals if reached >> q & 1)
        candidates.append(x + (c,) + x[::-1])
    if not candidates:
        return PropertyVerdict(False, None, bound, "pal-root")
    best = min(candidates, key=lambda w: (len(w), w))
    return PropertyVerdict(True, best, bound, "pal-root")


def accepts_infinitely_many_palindromes(a: Automaton) -> PropertyVerdict:
    if a.n_symbols == 1:
        return PropertyVerdict(is_infinite(a).holds, None, None, "unary")
    _, root = _root_of(a)
    return PropertyVerdict(is_infinite(root.inner).holds, None, None, "pal-root+scc")


def build_nonpal_acceptor(s: int, alphabet) -> Automaton:
    """Automaton accepting only non-palindromes, and all of those shorter than ``s``.

    It guesses the first mismatch, ``j+1`` symbols from each end, for
    ``j <= m = (s-1)//2 - 1``: a prefix counter ``P_j`` reads ``j`` symbols,
    the mismatching symbol ``x`` moves to the loop state ``M_{x,j}``, a
    different symbol leaves the loop into the countdown ``S_j .. S_0``.
    """
    alphabet = tuple(alphabet)
    k = len(alphabet)
    if k < 2:
        raise UnaryAlphabet("there are no non-palindromes over a unary alphabet")
    if s < 2:
        raise ValueError("s must be at least 2")
    m = max(0, (s - 1) // 2 - 1)
    width = m + 1

    def pref(j):
        return j

    def loop(x, j):
        return width + x * width + j

    def suff(j):
        return width * (1 + k) + j

    trans = set()
    for j in range(width):
        for x in range(k):
            if j < m:
                trans.add((pref(j), x, pref(j + 1)))
            trans.add((pref(j), x, loop(x, j)))
            for y in range(k):
                trans.add((loop(x, j), y, loop(x, j)))
                if y != x:
                    trans.add((loop(x, j), y, suff(j)))
            if j:
                trans.add((suff(j), x, suff(j - 1)))
    return Automaton(alphabet, width * (k + 2), frozenset(trans), {pref(0)}, {suff(0)})


def has_dead_state(a: Automaton) -> bool:
    if a.kind is not Kind.DFA:
        raise NotADfa("dead states are defined here for complete DFAs")
    return bool(accessible(a) - coaccessible(a))


def is_palindromic(a: Automaton) -> PropertyVerdict:
    """Is every accepted word a palindrome?

    All non-palindromes shorter than ``3n`` are intersected with the
    language, ``n`` being the number of useful states.  A complete DFA with
    a dead state has ``n <= N-1`` useful states out of ``N``, so the search
    stays within the improved ``3N-3`` bound for DFAs.
    """
    if a.n_symbols < 2:
        return PropertyVerdict(True, None, 0, "unary")
    p = prepare(a)
    if p.n_states == 0:
        return PropertyVerdict(True, None, 0, "empty")
    s = 3 * p.n_states
    method = "nonpal-product"
    if a.kind is Kind.DFA and has_dead_state(a):
        s = min(s, 3 * a.n_states - 3)
        method = "nonpal-product-dfa"
    found = shortest_word(product(p, build_nonpal_acceptor(s, a.alphabet)))
    return PropertyVerdict(not found.holds, found.witness, s - 1, method)


def _flagged_machine(a: Automaton) -> Automaton:
    # state [p, q, f]: forward at p, backward at q, f = a mismatch was seen
    n = a.n_states
    pred = predecessors(a)
    delta = a.delta
    k = a.n_symbols
    closing = set()
    for p in range(n):
        closing.add((p, p))
        for c in range(k):
            for q in delta[p][c]:
                closing.add((p, q))

    def encode(t):
        p, q, f = t
        return 1 + 2 * (p * n + q) + f

    def moves(t):
        p, q, f = t
        for c in range(k):
            for r in delta[p][c]:
                for b in range(k):
                    flag = 1 if (f or b != c) else 0
                    for s in pred[q][b]:
                        yield c, (r, s, flag)

    seeds = [(i, g, 0) for i in sorted(a.initials) for g in sorted(a.finals)]
    return explore(a.alphabet, 2 * n * n + 1, encode, seeds, moves, lambda t: t[2] == 1 and (t[0], t[1]) in closing)


def accepts_infinitely_many_nonpalindromes(a: Automaton) -> PropertyVerdict:
    if a.n_symbols < 2:
        return PropertyVerdict(False, None, None, "unary")
    p = prepare(a)
    if p.n_states == 0:
        return PropertyVerdict(False, None, None, "empty")
    return PropertyVerdict(is_infinite(_flagged_machine(p)).holds, None, None, "flag-pairs+scc")
