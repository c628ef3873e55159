"""Bordered and unbordered words in the language of an automaton.

A word is bordered when it can be written ``u w u`` with ``u`` non-empty.
The *border root* accepts the possible ``u``: its states are triples
``[p, q, r]`` where ``p`` follows the first copy of ``u`` from an initial
state, ``q`` is a guessed state reached after ``u w`` and ``r`` follows the
second copy of ``u`` from ``q``.

For unbordered words no polynomial method is known; the searches below
enumerate accepted words inside the length ranges that are guaranteed to
contain a witness when one exists.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .automaton import (
    Automaton,
    PropertyVerdict,
    explore,
    is_infinite,
    iter_bits,
    prepare,
    strongly_connected_components,
    words_of_length,
)
from .errors import EpsilonNotSupported, SearchBudgetExceeded
from .words import is_unbordered

DEFAULT_WORD_CAP = 1_000_000


@dataclass(frozen=True)
class BorderRootAutomaton:
    """``inner`` accepts ``{u : u w u in L for some w}`` (including ``u = ε``
    when L is non-empty).

    ``states`` lists the triple behind each inner state (index 0 is the fresh
    start, ``None``).  ``reach[p]`` is the bitmask of states reachable from
    ``p`` and ``link[p][q]`` a shortest, lexicographically least word leading
    from ``p`` to ``q``.
    """

    inner: Automaton
    source_n: int
    declared_states: int
    states: tuple
    reach: tuple[int, ...]
    link: tuple[dict, ...]


def connecting_words(a: Automaton) -> tuple[tuple[int, ...], tuple[dict, ...]]:
    """Breadth-first search from every state; symbols are expanded in
    increasing order so the first path found to each state is the least."""
    reach = []
    links = []
    for p in range(a.n_states):
        link = {p: ()}
        todo = deque([p])
        while todo:
            q = todo.popleft()
            for c in range(a.n_symbols):
                for r in a.delta[q][c]:
                    if r not in link:
                        link[r] = link[q] + (c,)
                        todo.append(r)
        mask = 0
        for q in link:
            mask |= 1 << q
        reach.append(mask)
        links.append(link)
    return tuple(reach), tuple(links)


def build_border_root(a: Automaton) -> BorderRootAutomaton:
    if a.has_epsilon:
        raise EpsilonNotSupported("eliminate epsilon moves before building the border root")
    n = a.n_states
    reach, link = connecting_words(a)
    delta = a.delta
    finals = a.finals

    def moves(t):
        p, q, r = t
        for c in range(a.n_symbols):
            for p2 in delta[p][c]:
                for r2 in delta[r][c]:
                    yield c, (p2, q, r2)

    def is_final(t):
        p, q, r = t
        return r in finals and reach[p] >> q & 1

    seeds = [(i, q, q) for i in sorted(a.initials) for q in range(n)]
    inner, ids = explore(a.alphabet, n ** 3 + 1, None, seeds, moves, is_final, with_ids=True)
    states = [None] * inner.n_states
    for t, i in ids.items():
        states[i] = t
    return BorderRootAutomaton(inner, n, n ** 3 + 1, tuple(states), reach, link)


def _nonempty_paths(inner: Automaton) -> dict[int, tuple[int, ...]]:
    """Least shortest *non-empty* word reaching each inner state from the
    start (epsilon moves leave the start only)."""
    start = inner.start_set()
    first: list[tuple[int, int, int]] = []
    for s in iter_bits(start):
        for c, t in inner.out_edges[s]:
            if c >= 0:
                first.append((c, s, t))
    best: dict[int, tuple[int, ...]] = {}
    todo = deque()
    for c, _, t in sorted(first):
        if t not in best:
            best[t] = (c,)
            todo.append(t)
    while todo:
        s = todo.popleft()
        for c, t in inner.out_edges[s]:
            if c >= 0 and t not in best:
                best[t] = best[s] + (c,)
                todo.append(t)
    return best


def accepts_bordered(a: Automaton) -> PropertyVerdict:
    """Shortest accepted bordered word.

    Every root state ``[p, q, r]`` reached by a non-empty ``u`` and final
    gives the bordered word ``u w u`` with ``w`` the shortest link from ``p``
    to ``q``; the shortest of these is the shortest bordered word in L.
    """
    p = prepare(a)
    n = p.n_states
    bound = max(2 * n * n + n - 1, 0)
    if n == 0:
        return PropertyVerdict(False, None, bound, "border-root")
    root = build_border_root(p)
    paths = _nonempty_paths(root.inner)
    best = None
    for s, u in paths.items():
        if s in root.inner.finals:
            x, q, _ = root.states[s]
            cand = u + root.link[x][q] + u
            if best is None or (len(cand), cand) < (len(best), best):
                best = cand
    return PropertyVerdict(best is not None, best, bound, "border-root")


def _cycle_vertices(a: Automaton) -> int:
    succ = [[q for _, q in a.out_edges[s]] for s in range(a.n_states)]
    comp = strongly_connected_components(a.n_states, succ)
    mask = 0
    for s, _, t in a.transitions:
        if comp[s] == comp[t]:
            mask |= 1 << s
    return mask


def accepts_infinitely_many_bordered(a: Automaton) -> PropertyVerdict:
    """Infinitely many bordered words iff a fixed border ``u`` admits
    infinitely many middles (a ``p -> q`` path through a cycle), or there are
    infinitely many borders (the root language is infinite)."""
    p = prepare(a)
    if p.n_states == 0:
        return PropertyVerdict(False, None, None, "border-root")
    root = build_border_root(p)
    cyc = _cycle_vertices(p)
    through = [0] * p.n_states
    for x in range(p.n_states):
        mask = 0
        for v in iter_bits(root.reach[x] & cyc):
            mask |= root.reach[v]
        through[x] = mask
    for s in _nonempty_paths(root.inner):
        if s in root.inner.finals:
            x, q, _ = root.states[s]
            if through[x] >> q & 1:
                return PropertyVerdict(True, None, None, "border-root:middle-cycle")
    # root words must be non-empty; an infinite root language has
    # infinitely many of them
    if is_infinite(root.inner).holds:
        return PropertyVerdict(True, None, None, "border-root:infinite-root")
    return PropertyVerdict(False, None, None, "border-root")


def _search_unbordered(p: Automaton, lo: int, hi: int, cap: int, method: str, bound) -> PropertyVerdict:
    seen = 0
    for length in range(max(lo, 1), hi + 1):
        for w in words_of_length(p, length):
            seen += 1
            if seen > cap:
                covered = f"lengths {max(lo, 1)}..{length - 1}" if length > max(lo, 1) else "none"
                raise SearchBudgetExceeded(f"more than {cap} words enumerated", covered=covered)
            if is_unbordered(w):
                return PropertyVerdict(True, w, bound, method)
    return PropertyVerdict(False, None, bound, method)


def unbordered_window(n: int) -> tuple[int, int]:
    """Lengths guaranteed to hold an unbordered word of L when L holds
    infinitely many."""
    return 4 * n * n + 6 * n + 2, 8 * n * n + 18 * n + 5


def accepts_unbordered(a: Automaton, cap: int = DEFAULT_WORD_CAP) -> PropertyVerdict:
    """Shortest accepted unbordered word, searched up to length ``6n+1``.

    Raises :class:`SearchBudgetExceeded` once more than ``cap`` words were
    enumerated without a decision.
    """
    p = prepare(a)
    n = p.n_states
    return _search_unbordered(p, 1, 6 * n + 1, cap, "enumerate-6n+1", 6 * n + 1)


def accepts_infinitely_many_unbordered(a: Automaton, cap: int = DEFAULT_WORD_CAP) -> PropertyVerdict:
    p = prepare(a)
    lo, hi = unbordered_window(p.n_states)
    return _search_unbordered(p, lo, hi, cap, "enumerate-window", hi)
