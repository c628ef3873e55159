"""Brute-force reference answers used to cross-check the decision procedures.

Two kinds of oracle live here.

``oracle_decide`` walks the accepted words in (length, lexicographic) order
and applies the word-level predicate from :mod:`nfaprops.words`.  It is
exact once the length ceiling reaches the known witness bound.

The ``exact_*`` functions answer existence and infinitude questions without
any length ceiling.  They describe a word ``x`` only by what the automaton
can do with it (the set of states it leads to, or its state-to-state
relation), collect these signatures length by length, and stop when the
sequence of signature layers starts repeating.  They use plain frozensets
and share no code with the constructions they check.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Sequence

from .automaton import Automaton, accepts, prepare, words_of_length
from .errors import CapExceeded
from .words import is_bordered, is_k_power, is_palindrome, is_power, is_unbordered, primitivity

PREDICATES = (
    "nonempty",
    "palindrome",
    "non-palindrome",
    "k-power",
    "ge-k-power",
    "non-k-power",
    "power",
    "non-power",
    "bordered",
    "unbordered",
    "pattern",
)


@dataclass(frozen=True)
class OracleReport:
    predicate: str
    max_len: int
    holds: bool
    witness: tuple[int, ...] | None
    exhaustive: bool


def matches_pattern(w: Sequence, pattern: Sequence[int]) -> bool:
    """Is ``w = h(pattern)`` for a non-erasing morphism ``h``?  Backtracking."""
    w = tuple(w)

    def go(pos, i, assign):
        if i == len(pattern):
            return pos == len(w)
        v = pattern[i]
        if v in assign:
            img = assign[v]
            return w[pos:pos + len(img)] == img and go(pos + len(img), i + 1, assign)
        rest = len(pattern) - i - 1
        for end in range(pos + 1, len(w) - rest + 1):
            assign[v] = w[pos:end]
            if go(end, i + 1, assign):
                return True
            del assign[v]
        return False

    return go(0, 0, {})


def word_predicate(predicate: str, k: int | None = None, pattern=None) -> Callable[[tuple], bool]:
    if predicate in ("k-power", "ge-k-power", "non-k-power") and (k is None or k < 2):
        raise ValueError(f"{predicate} needs k >= 2")
    table = {
        "nonempty": lambda w: True,
        "palindrome": is_palindrome,
        "non-palindrome": lambda w: not is_palindrome(w),
        "k-power": lambda w: len(w) > 0 and is_k_power(w, k),
        "ge-k-power": lambda w: len(w) > 0 and primitivity(w).exponent >= k,
        "non-k-power": lambda w: len(w) == 0 or not is_k_power(w, k),
        "power": is_power,
        "non-power": lambda w: not is_power(w),
        "bordered": is_bordered,
        "unbordered": lambda w: len(w) > 0 and is_unbordered(w),
        "pattern": lambda w: matches_pattern(w, tuple(pattern)),
    }
    try:
        return table[predicate]
    except KeyError:
        raise ValueError(f"unknown predicate {predicate!r}") from None


def decision_bound(predicate: str, n: int, k: int | None = None) -> int | None:
    """Length up to which a witness must exist if one exists at all, for an
    automaton with ``n`` useful states; ``None`` when no bound is known."""
    if predicate == "nonempty":
        return n - 1
    if predicate == "palindrome":
        return 2 * n * n - 1
    if predicate == "non-palindrome":
        return 3 * n - 1
    if predicate == "k-power":
        return k * n ** k
    if predicate in ("ge-k-power", "power"):
        top = (k or 2) + n - 1
        return top * n ** top
    if predicate in ("non-k-power", "non-power"):
        return 3 * n
    if predicate == "bordered":
        return 2 * n * n + n - 1
    if predicate == "unbordered":
        return 6 * n + 1
    return None


def oracle_decide(
    a: Automaton,
    predicate: str,
    max_len: int,
    k: int | None = None,
    pattern=None,
    cap: int | None = None,
) -> OracleReport:
    """First accepted word of length ``<= max_len`` satisfying the predicate.

    ``cap`` limits the number of accepted words looked at per length
    (:class:`CapExceeded` beyond it).
    """
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    test = word_predicate(predicate, k, pattern)
    p = prepare(a)
    bound = decision_bound(predicate, p.n_states, k)
    for length in range(max_len + 1):
        count = 0
        for w in words_of_length(p, length):
            count += 1
            if cap is not None and count > cap:
                raise CapExceeded(length, cap)
            if test(w):
                return OracleReport(predicate, max_len, True, w, True)
    exhaustive = bound is not None and max_len >= bound
    return OracleReport(predicate, max_len, False, None, exhaustive)


def oracle_count_per_length(a: Automaton, max_len: int) -> list[tuple[int, int]]:
    """Exact number of accepted words of each length, by counting words per
    reachable subset of states."""
    layer = Counter({a.start_set(): 1})
    out = []
    fin = a.finals_mask
    for length in range(max_len + 1):
        out.append((length, sum(c for s, c in layer.items() if s & fin)))
        nxt: Counter = Counter()
        for s, c in layer.items():
            for sym in range(a.n_symbols):
                t = a.step(s, sym)
                if t:
                    nxt[t] += c
        layer = nxt
    return out


# -- signature layers ----------------------------------------------------------------------


class _Plain:
    """Epsilon-free view of an automaton with frozenset-valued moves."""

    def __init__(self, a: Automaton):
        self.a = a = prepare(a)
        self.n = a.n_states
        self.sigma = range(a.n_symbols)
        self.fwd = {}
        self.bwd = {}
        for p, c, q in a.transitions:
            self.fwd.setdefault((p, c), set()).add(q)
            self.bwd.setdefault((q, c), set()).add(p)
        self.initials = frozenset(a.initials)
        self.finals = frozenset(a.finals)

    def post(self, states, c):
        return frozenset(q for p in states for q in self.fwd.get((p, c), ()))

    def pre(self, states, c):
        return frozenset(p for q in states for p in self.bwd.get((q, c), ()))

    def relation(self, rel, c):
        """Relation of ``x c`` from the relation of ``x``."""
        return frozenset((p, r) for p, q in rel for r in self.fwd.get((q, c), ()))

    def letter(self, c):
        return frozenset((p, q) for p in range(self.n) for q in self.fwd.get((p, c), ()))


def _layers(first, step):
    """Distinct layers ``L_0, L_1, ...`` and the index where the sequence
    starts repeating (``L_i = L_j`` for the returned ``start <= i``)."""
    seen = {}
    layers = []
    layer = first
    while layer not in seen:
        seen[layer] = len(layers)
        layers.append(layer)
        layer = step(layer)
    return layers, seen[layer]


def _exists_and_infinite(first, step, good):
    layers, start = _layers(first, step)
    flags = [bool(good(layer)) for layer in layers]
    return any(flags), any(flags[start:])


def exact_palindromes(a: Automaton) -> tuple[bool, bool]:
    """(some palindrome accepted, infinitely many accepted).

    A palindrome is ``x x^R`` or ``x c x^R``; what matters of ``x`` is the set
    ``S`` of states it leads to and the set ``T`` of states from which
    ``x^R`` reaches a final state.
    """
    m = _Plain(a)
    if m.n == 0:
        return False, False
    first = frozenset({(m.initials, m.finals)})

    def step(layer):
        return frozenset((m.post(s, c), m.pre(t, c)) for s, t in layer for c in m.sigma)

    def good(layer):
        return any(s & t or any(m.post(s, c) & t for c in m.sigma) for s, t in layer)

    return _exists_and_infinite(first, step, good)


def exact_nonpalindromes(a: Automaton) -> tuple[bool, bool]:
    """Same for non-palindromes ``x (c) y^R`` with ``|x| = |y|`` and ``x != y``;
    the signature carries a flag for ``x != y``."""
    m = _Plain(a)
    if m.n == 0 or len(m.sigma) < 2:
        return False, False
    first = frozenset({(m.initials, m.finals, False)})

    def step(layer):
        return frozenset(
            (m.post(s, c), m.pre(t, d), f or c != d)
            for s, t, f in layer
            for c in m.sigma
            for d in m.sigma
        )

    def good(layer):
        return any(f and (s & t or any(m.post(s, c) & t for c in m.sigma)) for s, t, f in layer)

    return _exists_and_infinite(first, step, good)


def _accepting_relation(m: _Plain, rel) -> bool:
    return any(p in m.initials and q in m.finals for p, q in rel)


def _compose(r1, r2):
    by_src = {}
    for q, r in r2:
        by_src.setdefault(q, set()).add(r)
    return frozenset((p, r) for p, q in r1 for r in by_src.get(q, ()))


def _rel_power(rel, k):
    out = rel
    for _ in range(k - 1):
        out = _compose(out, rel)
    return out


def exact_k_powers(a: Automaton, k: int) -> tuple[bool, bool]:
    """Same for ``x^k`` with ``x`` non-empty, via the relation of ``x``."""
    m = _Plain(a)
    if m.n == 0:
        return False, False
    first = frozenset(m.letter(c) for c in m.sigma)

    def step(layer):
        return frozenset(m.relation(r, c) for r in layer for c in m.sigma)

    def good(layer):
        return any(_accepting_relation(m, _rel_power(r, k)) for r in layer)

    return _exists_and_infinite(first, step, good)


def _accepting_exponents(m: _Plain, rel, k):
    """(some exponent >= k accepted, infinitely many exponents accepted)."""
    powers = []
    seen = {}
    cur = rel
    while cur not in seen:
        seen[cur] = len(powers)
        powers.append(cur)
        cur = _compose(cur, rel)
    start = seen[cur]
    period = len(powers) - start
    some = False
    for e in range(k, k + len(powers) + period):
        i = e - 1
        if i >= len(powers):
            i = start + (i - start) % period
        if _accepting_relation(m, powers[i]):
            some = True
            break
    many = any(_accepting_relation(m, r) for r in powers[start:])
    return some, many


def exact_ge_k_powers(a: Automaton, k: int) -> tuple[bool, bool]:
    """Same for words ``x^l`` with ``l >= k``."""
    m = _Plain(a)
    if m.n == 0:
        return False, False
    first = frozenset(m.letter(c) for c in m.sigma)

    def step(layer):
        return frozenset(m.relation(r, c) for r in layer for c in m.sigma)

    layers, start = _layers(first, step)
    info = {}
    for layer in layers:
        for r in layer:
            if r not in info:
                info[r] = _accepting_exponents(m, r, k)
    exists = any(info[r][0] for layer in layers for r in layer)
    unbounded_exponent = any(v[1] for v in info.values())
    many_bases = any(info[r][0] for layer in layers[start:] for r in layer)
    return exists, unbounded_exponent or many_bases


def exact_bordered(a: Automaton) -> tuple[bool, bool]:
    """Same for bordered words ``u w u``.

    For the relation ``R`` of ``u`` the admissible middles ``w`` are the
    words leading from ``R(initials)`` into ``{q : R(q) meets finals}``.
    Infinitely many bordered words means infinitely many borders, or one
    border with infinitely many middles (a middle of length in ``[n, 2n)``).
    """
    m = _Plain(a)
    n = m.n
    if n == 0:
        return False, False

    def ends(rel):
        src = frozenset(q for p, q in rel if p in m.initials)
        dst = frozenset(p for p, q in rel if q in m.finals)
        return src, dst

    def middle_lengths(rel, upto):
        src, dst = ends(rel)
        cur = src
        out = []
        for length in range(upto):
            if cur & dst:
                out.append(length)
            cur = frozenset(q for c in m.sigma for q in m.post(cur, c))
        return out

    first = frozenset(m.letter(c) for c in m.sigma)

    def step(layer):
        return frozenset(m.relation(r, c) for r in layer for c in m.sigma)

    def good(layer):
        return any(middle_lengths(r, n) for r in layer)

    layers, start = _layers(first, step)
    flags = [good(layer) for layer in layers]
    exists = any(flags)
    many_borders = any(flags[start:])
    many_middles = any(
        any(length >= n for length in middle_lengths(r, 2 * n)) for layer in layers for r in layer
    )
    return exists, many_borders or many_middles


def relation_representatives(a: Automaton) -> dict:
    """A shortest non-empty word for every relation realised by one."""
    m = _Plain(a)
    reps = {}
    frontier = []
    for c in m.sigma:
        r = m.letter(c)
        if r not in reps:
            reps[r] = (c,)
            frontier.append(r)
    while frontier:
        nxt = []
        for r in frontier:
            for c in m.sigma:
                s = m.relation(r, c)
                if s not in reps:
                    reps[s] = reps[r] + (c,)
                    nxt.append(s)
        frontier = nxt
    return reps


def exact_pattern(a: Automaton, pattern: Sequence[int], image_len: int = 4):
    """Search for ``h`` with ``h(pattern)`` accepted.

    Variable images range over every word of length ``1..image_len`` plus a
    representative of every relation; since acceptance of ``h(pattern)``
    depends only on the relations of the images, this is exhaustive.
    Returns the image word or ``None``.
    """
    p = prepare(a)
    pattern = tuple(pattern)
    short = [w for length in range(1, image_len + 1) for w in itertools.product(range(p.n_symbols), repeat=length)]
    reps = sorted(set(relation_representatives(p).values()) - set(short), key=lambda w: (len(w), w))
    candidates = short + reps
    m = max(pattern)
    for images in itertools.product(candidates, repeat=m):
        word = tuple(s for v in pattern for s in images[v - 1])
        if accepts(p, word):
            return word
    return None
