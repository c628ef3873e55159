"""Automaton data model and the graph algorithms shared by every analysis.

States are the integers ``0 .. n_states-1``; symbols are indices into the
``alphabet`` tuple of printable names.  A word is a tuple of symbol indices.
Sets of states are handled internally as ``int`` bitmasks.
"""
from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import AlphabetMismatch, CapExceeded, InvalidAutomaton, StateBudgetExceeded

EPSILON = -1
"""Label of an epsilon transition.  Never a member of an alphabet."""

INF = float("inf")


class Kind(enum.Enum):
    NFA = "nfa"
    NFA_EPSILON = "nfa-epsilon"
    DFA = "dfa"


@dataclass(frozen=True)
class SizeMetrics:
    n: int
    t: int

    @property
    def N(self) -> int:
        return self.n + self.t


@dataclass(frozen=True)
class PropertyVerdict:
    """Outcome of a decision procedure.

    ``witness`` is a word (tuple of symbol ids) demonstrating the answer when
    the procedure produces one; ``bound_used`` is the length bound the
    procedure relied on; ``method`` names the algorithm.
    """

    holds: bool
    witness: tuple[int, ...] | None = None
    bound_used: int | None = None
    method: str = ""


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Automaton:
    """A finite automaton, possibly with epsilon moves and several initial states.

    ``transitions`` holds ``(source, label, target)`` triples where ``label`` is
    a symbol index or :data:`EPSILON`.  ``kind`` is inferred when omitted;
    asking for ``Kind.DFA`` checks that the machine is a complete DFA.
    """

    alphabet: tuple[str, ...]
    n_states: int
    transitions: frozenset = field(default_factory=frozenset)
    initials: frozenset = field(default_factory=frozenset)
    finals: frozenset = field(default_factory=frozenset)
    kind: Kind | None = None

    def __post_init__(self):
        alphabet = tuple(self.alphabet)
        transitions = frozenset((int(p), int(a), int(q)) for p, a, q in self.transitions)
        initials = frozenset(int(q) for q in self.initials)
        finals = frozenset(int(q) for q in self.finals)
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "transitions", transitions)
        object.__setattr__(self, "initials", initials)
        object.__setattr__(self, "finals", finals)

        if len(set(alphabet)) != len(alphabet):
            raise InvalidAutomaton("duplicate symbol names in alphabet")
        if any(not name or name == "-" or any(c.isspace() for c in name) for name in alphabet):
            raise InvalidAutomaton("symbol names must be non-empty, without spaces, and not '-'")
        n = self.n_states
        if n < 0:
            raise InvalidAutomaton("negative state count")
        for p, a, q in transitions:
            if not (0 <= p < n and 0 <= q < n):
                raise InvalidAutomaton(f"transition ({p}, {a}, {q}) has an endpoint out of range")
            if a != EPSILON and not 0 <= a < len(alphabet):
                raise InvalidAutomaton(f"transition ({p}, {a}, {q}) has an unknown label")
        for q in initials | finals:
            if not 0 <= q < n:
                raise InvalidAutomaton(f"state {q} out of range")

        has_eps = any(a == EPSILON for _, a, _ in transitions)
        kind = self.kind
        if kind is None:
            kind = Kind.NFA_EPSILON if has_eps else Kind.NFA
        elif kind is Kind.NFA and has_eps:
            raise InvalidAutomaton("an NFA may not carry epsilon transitions")
        elif kind is Kind.DFA:
            problem = _dfa_problem(n, len(alphabet), transitions, initials)
            if problem:
                raise InvalidAutomaton(f"not a complete DFA: {problem}")
        object.__setattr__(self, "kind", kind)

    # -- construction helpers -------------------------------------------------

    @classmethod
    def build(cls, alphabet, n_states, transitions, initials, finals, kind=None) -> "Automaton":
        """Build from symbol *names*; a label of ``None`` or ``'-'`` is epsilon.

        ``alphabet`` may be a string of one-character symbols.
        """
        alphabet = tuple(alphabet)
        index = {name: i for i, name in enumerate(alphabet)}
        triples = []
        for p, name, q in transitions:
            if name is None or name == "-":
                triples.append((p, EPSILON, q))
            else:
                try:
                    triples.append((p, index[name], q))
                except KeyError:
                    raise InvalidAutomaton(f"symbol {name!r} not in alphabet") from None
        if isinstance(kind, str):
            kind = Kind(kind)
        return cls(alphabet, n_states, frozenset(triples), frozenset(initials), frozenset(finals), kind)

    def word(self, text: str | Sequence[str]) -> tuple[int, ...]:
        """Convert printable text to a word.

        Text is split on whitespace when it contains any; otherwise every
        character is one symbol.
        """
        index = {name: i for i, name in enumerate(self.alphabet)}
        if isinstance(text, str):
            parts = text.split() if any(c.isspace() for c in text) else list(text)
        else:
            parts = list(text)
        try:
            return tuple(index[p] for p in parts)
        except KeyError as exc:
            raise ValueError(f"symbol {exc.args[0]!r} not in alphabet") from None

    def render(self, word: Iterable[int], sep: str | None = None) -> str:
        if sep is None:
            sep = "" if all(len(s) == 1 for s in self.alphabet) else " "
        return sep.join(self.alphabet[a] for a in word)

    # -- basic facts ----------------------------------------------------------

    @property
    def n_symbols(self) -> int:
        return len(self.alphabet)

    def size(self) -> SizeMetrics:
        return SizeMetrics(self.n_states, len(self.transitions))

    @property
    def has_epsilon(self) -> bool:
        return any(a == EPSILON for _, a, _ in self.transitions)

    @cached_property
    def out_edges(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per state, sorted ``(label, target)`` pairs."""
        out = [[] for _ in range(self.n_states)]
        for p, a, q in self.transitions:
            out[p].append((a, q))
        return tuple(tuple(sorted(edges)) for edges in out)

    @cached_property
    def in_edges(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per state, sorted ``(label, source)`` pairs."""
        inc = [[] for _ in range(self.n_states)]
        for p, a, q in self.transitions:
            inc[q].append((a, p))
        return tuple(tuple(sorted(edges)) for edges in inc)

    @cached_property
    def delta(self) -> tuple[tuple[tuple[int, ...], ...], ...]:
        """``delta[p][a]`` is the sorted tuple of targets of ``p`` on symbol ``a``."""
        table = [[[] for _ in range(self.n_symbols)] for _ in range(self.n_states)]
        for p, a, q in self.transitions:
            if a != EPSILON:
                table[p][a].append(q)
        return tuple(tuple(tuple(sorted(t)) for t in row) for row in table)

    # -- bitmask simulation ---------------------------------------------------

    @cached_property
    def _closure(self) -> tuple[int, ...]:
        eps = [[] for _ in range(self.n_states)]
        for p, a, q in self.transitions:
            if a == EPSILON:
                eps[p].append(q)
        result = []
        for q in range(self.n_states):
            mask = 1 << q
            todo = [q]
            while todo:
                p = todo.pop()
                for r in eps[p]:
                    if not mask >> r & 1:
                        mask |= 1 << r
                        todo.append(r)
            result.append(mask)
        return tuple(result)

    @cached_property
    def _step_table(self) -> tuple[tuple[int, ...], ...]:
        # _step_table[a][q] = closure(delta(q, a))
        clo = self._closure
        table = []
        for a in range(self.n_symbols):
            row = []
            for q in range(self.n_states):
                mask = 0
                for r in self.delta[q][a]:
                    mask |= clo[r]
                row.append(mask)
            table.append(tuple(row))
        return tuple(table)

    @cached_property
    def finals_mask(self) -> int:
        mask = 0
        for q in self.finals:
            mask |= 1 << q
        return mask

    def closure(self, mask: int) -> int:
        out = 0
        clo = self._closure
        for q in iter_bits(mask):
            out |= clo[q]
        return out

    def start_set(self) -> int:
        mask = 0
        for q in self.initials:
            mask |= 1 << q
        return self.closure(mask)

    def step(self, mask: int, symbol: int) -> int:
        """Successor set of an epsilon-closed set on ``symbol`` (closed again)."""
        row = self._step_table[symbol]
        out = 0
        for q in iter_bits(mask):
            out |= row[q]
        return out

    def run(self, word: Iterable[int], mask: int | None = None) -> int:
        if mask is None:
            mask = self.start_set()
        for a in word:
            if not mask:
                break
            mask = self.step(mask, a)
        return mask

    def coreach(self, length: int) -> list[int]:
        """``coreach(m)[j]``: states from which some final state is reachable
        reading exactly ``j`` symbols, for ``j <= m``."""
        table = self.__dict__.setdefault("_coreach_cache", [])
        if not table:
            mask = 0
            for q in range(self.n_states):
                if self._closure[q] & self.finals_mask:
                    mask |= 1 << q
            table.append(mask)
        steps = self._step_table
        while len(table) <= length:
            prev = table[-1]
            mask = 0
            for q in range(self.n_states):
                for a in range(self.n_symbols):
                    if steps[a][q] & prev:
                        mask |= 1 << q
                        break
            table.append(mask)
        return table


def _dfa_problem(n, n_symbols, transitions, initials):
    if len(initials) != 1:
        return "needs exactly one initial state"
    seen = set()
    for p, a, _ in transitions:
        if a == EPSILON:
            return "has an epsilon transition"
        if (p, a) in seen:
            return f"state {p} has two transitions on symbol {a}"
        seen.add((p, a))
    if len(seen) != n * n_symbols:
        return "transition function is not total"
    return None


# -- small builders ------------------------------------------------------------


def empty_automaton(alphabet) -> Automaton:
    return Automaton(tuple(alphabet), 0)


def universal(alphabet) -> Automaton:
    """One-state automaton for Sigma*."""
    alphabet = tuple(alphabet)
    return Automaton(alphabet, 1, frozenset((0, a, 0) for a in range(len(alphabet))), {0}, {0})


def length_window(lo: int, hi: int, alphabet) -> Automaton:
    """Complete DFA for the words whose length lies in ``[lo, hi]``.

    States ``0..hi`` count symbols read; state ``hi+1`` is the overflow sink.
    """
    alphabet = tuple(alphabet)
    if lo < 0 or hi < lo:
        raise ValueError("need 0 <= lo <= hi")
    sink = hi + 1
    trans = set()
    for q in range(hi + 2):
        for a in range(len(alphabet)):
            trans.add((q, a, min(q + 1, sink)))
    finals = range(lo, hi + 1)
    return Automaton(alphabet, hi + 2, frozenset(trans), {0}, finals, Kind.DFA)


def from_words(words: Iterable[Sequence[int]], alphabet) -> Automaton:
    """Trie-shaped automaton accepting exactly the given finite set of words."""
    alphabet = tuple(alphabet)
    children: list[dict[int, int]] = [{}]
    finals = set()
    for w in words:
        q = 0
        for a in w:
            if a not in children[q]:
                children.append({})
                children[q][a] = len(children) - 1
            q = children[q][a]
        finals.add(q)
    trans = frozenset((p, a, q) for p, row in enumerate(children) for a, q in row.items())
    return Automaton(alphabet, len(children), trans, {0}, finals)


def _relabel(a: Automaton, keep: Sequence[int], kind=None) -> Automaton:
    new = {q: i for i, q in enumerate(keep)}
    trans = frozenset(
        (new[p], l, new[q]) for p, l, q in a.transitions if p in new and q in new
    )
    initials = frozenset(new[q] for q in a.initials if q in new)
    finals = frozenset(new[q] for q in a.finals if q in new)
    if kind is Kind.DFA and _dfa_problem(len(keep), a.n_symbols, trans, initials):
        kind = None
    return Automaton(a.alphabet, len(keep), trans, initials, finals, kind)


# -- reachability, trimming ----------------------------------------------------


def accessible(a: Automaton) -> set[int]:
    seen = set(a.initials)
    todo = list(seen)
    while todo:
        p = todo.pop()
        for _, q in a.out_edges[p]:
            if q not in seen:
                seen.add(q)
                todo.append(q)
    return seen


def coaccessible(a: Automaton) -> set[int]:
    seen = set(a.finals)
    todo = list(seen)
    while todo:
        q = todo.pop()
        for _, p in a.in_edges[q]:
            if p not in seen:
                seen.add(p)
                todo.append(p)
    return seen


def trim(a: Automaton) -> Automaton:
    """Keep only useful states, renumbered in ascending order of original id.

    When no state is useful the canonical 0-state automaton is returned.
    """
    useful = sorted(accessible(a) & coaccessible(a))
    if not useful:
        return empty_automaton(a.alphabet)
    if len(useful) == a.n_states:
        return a
    return _relabel(a, useful, a.kind if a.kind is Kind.DFA else None)


def eliminate_epsilon(a: Automaton) -> Automaton:
    """Equivalent epsilon-free automaton on the same states."""
    if not a.has_epsilon:
        if a.kind is Kind.NFA_EPSILON:
            return Automaton(a.alphabet, a.n_states, a.transitions, a.initials, a.finals)
        return a
    trans = set()
    clo = a._closure
    for a_sym in range(a.n_symbols):
        for p in range(a.n_states):
            # close on both sides: epsilon* a epsilon*
            for q in iter_bits(a.step(clo[p], a_sym)):
                trans.add((p, a_sym, q))
    finals = {q for q in range(a.n_states) if a._closure[q] & a.finals_mask}
    return Automaton(a.alphabet, a.n_states, frozenset(trans), a.initials, finals)


def prepare(a: Automaton) -> Automaton:
    """Epsilon-free, trimmed copy; what most decision procedures work on."""
    return trim(eliminate_epsilon(a))


# -- membership ------------------------------------------------------------------


def accepts(a: Automaton, word: Sequence[int]) -> bool:
    return bool(a.run(word) & a.finals_mask)


# -- strongly connected components --------------------------------------------


def strongly_connected_components(n: int, succ: Sequence[Sequence[int]]) -> list[int]:
    """Component index of every vertex (iterative Tarjan)."""
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comp = [-1] * n
    counter = 0
    n_comp = 0
    for root in range(n):
        if index[root] != -1:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        work = [(root, iter(succ[root]))]
        while work:
            v, it = work[-1]
            for w in it:
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, iter(succ[w])))
                    break
                if on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
            else:
                work.pop()
                if work:
                    u = work[-1][0]
                    if low[v] < low[u]:
                        low[u] = low[v]
                if low[v] == index[v]:
                    while True:
                        w = stack.pop()
                        on_stack[w] = False
                        comp[w] = n_comp
                        if w == v:
                            break
                    n_comp += 1
    return comp


def is_empty(a: Automaton) -> PropertyVerdict:
    """Emptiness test.

    ``holds`` is True when L(a) is *non*-empty, i.e. when a witness exists;
    the witness is the shortest accepted word and is shorter than the number
    of useful states.
    """
    t = trim(a)
    found = shortest_word(t)
    return PropertyVerdict(found.holds, found.witness, max(t.n_states - 1, 0), "trim+bfs")


def is_infinite(a: Automaton) -> PropertyVerdict:
    """L(a) is infinite iff, after trimming, some non-epsilon transition has
    both endpoints in one strongly connected component."""
    t = trim(a)
    succ = [[q for _, q in t.out_edges[p]] for p in range(t.n_states)]
    comp = strongly_connected_components(t.n_states, succ)
    for p, label, q in t.transitions:
        if label != EPSILON and comp[p] == comp[q]:
            return PropertyVerdict(True, None, None, "scc")
    return PropertyVerdict(False, None, None, "scc")


# -- shortest words ----------------------------------------------------------------


def _nonempty_variant(a: Automaton) -> Automaton:
    # layer 0: nothing read yet; layer 1: at least one symbol read
    n = a.n_states
    trans = set()
    for p, l, q in a.transitions:
        if l == EPSILON:
            trans.add((p, l, q))
            trans.add((p + n, l, q + n))
        else:
            trans.add((p, l, q + n))
            trans.add((p + n, l, q + n))
    return Automaton(a.alphabet, 2 * n, frozenset(trans), a.initials, frozenset(q + n for q in a.finals))


def distance_to_final(a: Automaton) -> list[float]:
    """Least number of symbols leading from each state to a final state."""
    dist = [INF] * a.n_states
    todo: deque[int] = deque()
    for q in a.finals:
        dist[q] = 0
        todo.append(q)
    while todo:
        q = todo.popleft()
        for label, p in a.in_edges[q]:
            w = 0 if label == EPSILON else 1
            if dist[q] + w < dist[p]:
                dist[p] = dist[q] + w
                if w:
                    todo.append(p)
                else:
                    todo.appendleft(p)
    return dist


def _min_over(mask: int, dist) -> float:
    best = INF
    for q in iter_bits(mask):
        if dist[q] < best:
            best = dist[q]
    return best


def shortest_word(a: Automaton, nonempty: bool = False) -> PropertyVerdict:
    """Shortest accepted word, lexicographically least among the shortest.

    With ``nonempty`` the empty word is not considered.
    """
    if nonempty:
        a = _nonempty_variant(a)
    if a.n_states == 0:
        return PropertyVerdict(False, None, None, "bfs")
    dist = distance_to_final(a)
    current = a.start_set()
    remaining = _min_over(current, dist)
    if remaining == INF:
        return PropertyVerdict(False, None, None, "bfs")
    word = []
    while remaining > 0:
        for sym in range(a.n_symbols):
            nxt = a.step(current, sym)
            if nxt and _min_over(nxt, dist) == remaining - 1:
                word.append(sym)
                current = nxt
                remaining -= 1
                break
        else:  # pragma: no cover - distances guarantee progress
            raise AssertionError("greedy reconstruction failed")
    return PropertyVerdict(True, tuple(word), None, "bfs")


# -- product ------------------------------------------------------------------------


def product(a: Automaton, b: Automaton) -> Automaton:
    """Trimmed automaton for L(a) ∩ L(b) on reachable pairs of states.

    An epsilon move of either operand advances that coordinate alone.
    """
    if a.alphabet != b.alphabet:
        raise AlphabetMismatch(f"{a.alphabet} != {b.alphabet}")
    ids: dict[tuple[int, int], int] = {}
    order: list[tuple[int, int]] = []

    def state(pair):
        i = ids.get(pair)
        if i is None:
            i = ids[pair] = len(order)
            order.append(pair)
        return i

    initials = [state((p, q)) for p in sorted(a.initials) for q in sorted(b.initials)]
    trans = set()
    i = 0
    while i < len(order):
        p, q = order[i]
        for label, p2 in a.out_edges[p]:
            if label == EPSILON:
                trans.add((i, EPSILON, state((p2, q))))
        for label, q2 in b.out_edges[q]:
            if label == EPSILON:
                trans.add((i, EPSILON, state((p, q2))))
        dp, dq = a.delta[p], b.delta[q]
        for sym in range(a.n_symbols):
            for p2 in dp[sym]:
                for q2 in dq[sym]:
                    trans.add((i, sym, state((p2, q2))))
        i += 1
    finals = [ids[(p, q)] for (p, q) in order if p in a.finals and q in b.finals]
    kind = Kind.DFA if a.kind is Kind.DFA and b.kind is Kind.DFA else None
    if kind is Kind.DFA and _dfa_problem(len(order), a.n_symbols, trans, initials):
        kind = None
    return trim(Automaton(a.alphabet, len(order), frozenset(trans), initials, finals, kind))


# -- enumeration ------------------------------------------------------------------------


def words_of_length(a: Automaton, length: int) -> Iterator[tuple[int, ...]]:
    """Accepted words of exactly ``length`` symbols, in lexicographic order.

    Branches that cannot be completed to an accepted word of this length are
    pruned, so every explored prefix yields at least one word.
    """
    if a.n_states == 0:
        return
    co = a.coreach(length)
    start = a.start_set()
    if not start & co[length]:
        return
    if length == 0:
        yield ()
        return
    word: list[int] = []
    sets = [start]
    next_sym = [0]
    n_sym = a.n_symbols
    while sets:
        depth = len(word)
        if depth == length:
            yield tuple(word)
            sets.pop()
            next_sym.pop()
            word.pop()
            continue
        current = sets[-1]
        need = co[length - depth - 1]
        sym = next_sym[-1]
        while sym < n_sym:
            nxt = a.step(current, sym)
            sym += 1
            if nxt & need:
                next_sym[-1] = sym
                word.append(sym - 1)
                sets.append(nxt)
                next_sym.append(0)
                break
        else:
            sets.pop()
            next_sym.pop()
            if word:
                word.pop()


def iter_words(a: Automaton, min_len: int, max_len: int) -> Iterator[tuple[int, ...]]:
    """Accepted words with ``min_len <= |w| <= max_len`` in (length, lex) order."""
    for length in range(min_len, max_len + 1):
        yield from words_of_length(a, length)


def enumerate_words(a: Automaton, min_len: int, max_len: int, cap: int | None = None) -> list[tuple[int, ...]]:
    """List the accepted words with length in ``[min_len, max_len]``.

    Raises :class:`CapExceeded` as soon as some single length has more than
    ``cap`` accepted words (``cap=None`` means unbounded).
    """
    if min_len > max_len:
        raise ValueError("min_len must not exceed max_len")
    if cap is not None and cap < 1:
        raise ValueError("cap must be at least 1")
    out = []
    for length in range(max(min_len, 0), max_len + 1):
        count = 0
        for w in words_of_length(a, length):
            count += 1
            if cap is not None and count > cap:
                raise CapExceeded(length, cap)
            out.append(w)
    return out


def explore(alphabet, n_states, encode, seeds, moves, is_final, budget=None, with_ids=False):
    """Materialise the reachable part of a construction with a fresh start state.

    State ``0`` is the fresh start with epsilon moves to each seed;
    ``moves(s)`` yields ``(symbol, successor)`` pairs.  With an ``encode``
    function the construction's own numbering and declared ``n_states`` are
    kept.  With ``encode=None`` states are numbered ``1, 2, ...`` in
    discovery order and only the reachable ones are counted, which is what
    keeps tuple constructions over large state spaces affordable; ``budget``
    then caps that count.  With ``with_ids`` the map from construction
    states to ids is returned as well.
    """
    ids = {}

    def ident(s):
        i = ids.get(s)
        if i is None:
            if encode is None:
                if budget is not None and len(ids) >= budget:
                    raise StateBudgetExceeded(n_states, budget)
                i = len(ids) + 1
            else:
                i = encode(s)
            ids[s] = i
            todo.append(s)
        return i

    trans = set()
    finals = set()
    todo = deque()
    for s in seeds:
        trans.add((0, EPSILON, ident(s)))
    while todo:
        s = todo.popleft()
        i = ids[s]
        if is_final(s):
            finals.add(i)
        for sym, t in moves(s):
            trans.add((i, sym, ident(t)))
    total = n_states if encode is not None else len(ids) + 1
    result = Automaton(tuple(alphabet), total, frozenset(trans), frozenset({0}), frozenset(finals), Kind.NFA_EPSILON)
    return (result, ids) if with_ids else result


def predecessors(a: Automaton) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """``pred[q][a]``: sorted states ``p`` with ``q`` in ``delta(p, a)``."""
    table = [[[] for _ in range(a.n_symbols)] for _ in range(a.n_states)]
    for p, sym, q in a.transitions:
        if sym != EPSILON:
            table[q][sym].append(p)
    return tuple(tuple(tuple(sorted(t)) for t in row) for row in table)
