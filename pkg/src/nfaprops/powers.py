"""k-powers, powers and patterns in the language of an automaton.

Two engines are used.  The *k-th root* automaton accepts ``{x : x^k in L}``
and answers questions about a fixed exponent.  The *transition monoid* of
boolean matrices answers questions over many exponents at once, and pattern
questions, as long as the monoid is small enough to materialise.

The "all words are (k-)powers" tests rely on short-witness theorems instead:
if every accepted word of length at most ``3n`` is a k-power then every
accepted word is.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .automaton import (
    Automaton,
    Kind,
    PropertyVerdict,
    explore,
    is_infinite,
    length_window,
    prepare,
    product,
    shortest_word,
    words_of_length,
)
from .boolmat import DEFAULT_ELEMENT_CAP, BoolMatrix, accepting, mat_mul, monoid_closure, power_sequence
from .errors import EpsilonNotSupported, Inconclusive, StateBudgetExceeded
from .palindromes import has_dead_state
from .words import is_power

DEFAULT_STATE_BUDGET = 2_000_000


# -- patterns ----------------------------------------------------------------------------


@dataclass(frozen=True)
class Pattern:
    """A word over variables ``1..m``, e.g. ``Pattern((1, 2, 1, 2))``."""

    variables: tuple[int, ...]

    def __post_init__(self):
        vs = tuple(int(v) for v in self.variables)
        object.__setattr__(self, "variables", vs)
        if not vs:
            raise ValueError("a pattern must be non-empty")
        if set(vs) != set(range(1, max(vs) + 1)):
            raise ValueError("pattern variables must be numbered 1..m without gaps")

    @classmethod
    def parse(cls, text: str) -> "Pattern":
        try:
            return cls(tuple(int(t) for t in text.replace(",", " ").split()))
        except ValueError as exc:
            raise ValueError(f"bad pattern {text!r}: {exc}") from None

    @classmethod
    def power(cls, k: int) -> "Pattern":
        return cls((1,) * k)

    @property
    def n_variables(self) -> int:
        return max(self.variables)

    def __str__(self):
        return " ".join(map(str, self.variables))


# -- k-th roots ----------------------------------------------------------------------------


@dataclass(frozen=True)
class KthRootAutomaton:
    """``inner`` accepts ``{x : x^k in L(source)}``.

    Its states are the reachable tuples ``[g_1..g_{k-1}, p_0..p_{k-1}]``
    numbered in discovery order; ``declared_states`` is the size of the full
    tuple space plus the fresh start.
    """

    inner: Automaton
    k: int
    source_n: int
    declared_states: int


def build_kth_root(a: Automaton, k: int, budget: int = DEFAULT_STATE_BUDGET) -> KthRootAutomaton:
    """Run ``k`` copies of ``a`` side by side on the same input ``x``.

    Copy ``j`` starts from a guessed state ``g_j`` (copy 0 from an initial
    state); acceptance requires copy ``j`` to end where copy ``j+1`` started
    and the last copy to end in a final state.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    if a.has_epsilon:
        raise EpsilonNotSupported("eliminate epsilon moves before building a k-th root")
    n = a.n_states
    declared = n ** (2 * k - 1) + 1
    delta = a.delta
    finals = a.finals

    # lazy, so a small budget trips before n^(k-1) seeds are listed
    seeds = (
        guess + (i,) + guess
        for i in sorted(a.initials)
        for guess in itertools.product(range(n), repeat=k - 1)
    )

    def moves(state):
        guess, runs = state[: k - 1], state[k - 1:]
        for c in range(a.n_symbols):
            options = [delta[p][c] for p in runs]
            if all(options):
                for nxt in itertools.product(*options):
                    yield c, guess + nxt

    def final(state):
        guess, runs = state[: k - 1], state[k - 1:]
        return runs[:-1] == guess and runs[-1] in finals

    try:
        inner = explore(a.alphabet, declared, None, seeds, moves, final, budget=budget)
    except StateBudgetExceeded:
        raise StateBudgetExceeded(declared, budget) from None
    return KthRootAutomaton(inner, k, n, declared)


def accepts_k_power(a: Automaton, k: int, budget: int = DEFAULT_STATE_BUDGET) -> PropertyVerdict:
    """Shortest ``x^k`` in L (least ``|x|``, then least ``x``)."""
    p = prepare(a)
    bound = k * p.n_states ** k
    root = build_kth_root(p, k, budget)
    found = shortest_word(root.inner, nonempty=True)
    if not found.holds:
        return PropertyVerdict(False, None, bound, "kth-root")
    return PropertyVerdict(True, found.witness * k, bound, "kth-root")


def accepts_infinitely_many_k_powers(a: Automaton, k: int, budget: int = DEFAULT_STATE_BUDGET) -> PropertyVerdict:
    root = build_kth_root(prepare(a), k, budget)
    return PropertyVerdict(is_infinite(root.inner).holds, None, None, "kth-root+scc")


# -- exponents k and above ----------------------------------------------------------------


def _least_accepting_exponent(a: Automaton, e: BoolMatrix, k: int) -> int | None:
    seq, start = power_sequence(e)
    period = len(seq) - start
    for ell in range(k, k + len(seq) + period):
        idx = ell - 1
        if idx >= len(seq):
            idx = start + (idx - start) % period
        if accepting(a, seq[idx]):
            return ell
    return None


def _ge_k_by_monoid(p: Automaton, k: int, monoid) -> PropertyVerdict:
    best = None
    for e, w in monoid.semigroup.items():
        ell = _least_accepting_exponent(p, e, k)
        if ell is None:
            continue
        cand = w * ell
        if best is None or (len(cand), cand) < (len(best), best):
            best = cand
    return PropertyVerdict(best is not None, best, None, "monoid")


def _ge_k_by_roots(p: Automaton, k: int, budget: int) -> PropertyVerdict:
    n = p.n_states
    best = None
    skipped = []
    for ell in range(k, k + max(n, 1)):
        try:
            found = accepts_k_power(p, ell, budget)
        except StateBudgetExceeded:
            skipped.append(ell)
            continue
        if found.holds and (best is None or (len(found.witness), found.witness) < (len(best), best)):
            best = found.witness
    if best is None and skipped:
        raise Inconclusive(
            "transition monoid truncated and some k-th roots exceed the state budget",
            covered=f"exponents {sorted(set(range(k, k + max(n, 1))) - set(skipped))} checked; {skipped} skipped",
        )
    return PropertyVerdict(best is not None, best, None, "kth-roots")


def accepts_ge_k_power(
    a: Automaton,
    k: int,
    budget: int = DEFAULT_STATE_BUDGET,
    element_cap: int = DEFAULT_ELEMENT_CAP,
) -> PropertyVerdict:
    """Does L contain an l-power for some ``l >= k``?

    Such a power exists iff one exists with ``k <= l < k + n``.  The monoid is
    tried first; the witness is then the shortest such power.  When the monoid
    is too large the roots for ``l`` in that range are used instead.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    p = prepare(a)
    monoid = monoid_closure(p, element_cap)
    if not monoid.truncated:
        return _ge_k_by_monoid(p, k, monoid)
    return _ge_k_by_roots(p, k, budget)


def accepts_power(a: Automaton, budget: int = DEFAULT_STATE_BUDGET, element_cap: int = DEFAULT_ELEMENT_CAP) -> PropertyVerdict:
    """Shortest accepted power ``x^l`` with ``l >= 2``; exponents up to
    ``n+1`` suffice."""
    p = prepare(a)
    n = p.n_states
    verdict = accepts_ge_k_power(p, 2, budget, element_cap)
    return PropertyVerdict(verdict.holds, verdict.witness, (n + 1) * n ** (n + 1), verdict.method)


def accepts_infinitely_many_ge_k_powers(
    a: Automaton,
    k: int,
    budget: int = DEFAULT_STATE_BUDGET,
    element_cap: int = DEFAULT_ELEMENT_CAP,
) -> PropertyVerdict:
    """Infinitely many words ``x^l`` with ``l >= k`` in L?

    Either infinitely many bases ``x`` have an accepted power with exponent
    in ``[k, k+n)``, or a single base has accepted powers with unboundedly
    many exponents.  On the monoid the first case is an infinite-language
    test on the Cayley graph and the second is a look at the cycle of powers
    of each element.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    p = prepare(a)
    n = p.n_states
    monoid = monoid_closure(p, element_cap)
    if not monoid.truncated:
        if n == 0:
            return PropertyVerdict(False, None, None, "monoid")
        for e in monoid.semigroup:
            seq, start = power_sequence(e)
            if any(accepting(p, f) for f in seq[start:]):
                return PropertyVerdict(True, None, None, "monoid-cycle")
        elements = list(monoid.witness)
        index = {e: i for i, e in enumerate(elements)}
        trans = set()
        for e in elements:
            for s, g in monoid.generators.items():
                trans.add((index[e], s, index[mat_mul(e, g)]))
        finals = set()
        for e in elements:
            seq, start = power_sequence(e)
            period = len(seq) - start
            for ell in range(k, k + n):
                idx = ell - 1
                if idx >= len(seq):
                    idx = start + (idx - start) % period
                if accepting(p, seq[idx]):
                    finals.add(index[e])
                    break
        cayley = Automaton(p.alphabet, len(elements), frozenset(trans), {index[monoid.identity]}, finals)
        return PropertyVerdict(is_infinite(cayley).holds, None, None, "monoid-cayley")
    skipped = []
    for ell in range(k, k + max(n, 1)):
        try:
            if accepts_infinitely_many_k_powers(p, ell, budget).holds:
                return PropertyVerdict(True, None, None, "kth-roots")
        except StateBudgetExceeded:
            skipped.append(ell)
    raise Inconclusive(
        "transition monoid truncated; roots cannot rule out unboundedly many exponents",
        covered=f"exponents {k}..{k + max(n, 1) - 1} checked except {skipped}",
    )


# -- patterns ------------------------------------------------------------------------------


def pattern_acceptance(a: Automaton, pattern: Pattern, element_cap: int = DEFAULT_ELEMENT_CAP) -> PropertyVerdict:
    """Is ``h(pattern)`` in L for some non-erasing morphism ``h``?

    Each variable is assigned the matrix ``B_x`` of a non-empty word ``x``;
    assignments are tried in order of witness length, the product is built
    left to right along the pattern and the first accepting one is returned
    as ``h(pattern)``.
    """
    if not isinstance(pattern, Pattern):
        pattern = Pattern(tuple(pattern))
    p = prepare(a)
    monoid = monoid_closure(p, element_cap)
    items = sorted(monoid.semigroup.items(), key=lambda ew: (len(ew[1]), ew[1]))
    m = pattern.n_variables
    if p.n_states == 0:
        return PropertyVerdict(False, None, None, "monoid")

    # blocks of the pattern between first occurrences, so each new variable is
    # chosen as soon as it is needed and partial products are shared
    first_seen = {}
    for pos, v in enumerate(pattern.variables):
        first_seen.setdefault(v, pos)
    order = sorted(first_seen, key=first_seen.get)
    assign: dict[int, tuple[BoolMatrix, tuple[int, ...]]] = {}
    var_names = pattern.variables
    identity = BoolMatrix.identity(p.n_states)

    def extend(pos: int, acc: BoolMatrix):
        # consume positions whose variable is already assigned
        while pos < len(var_names) and var_names[pos] in assign:
            acc = mat_mul(acc, assign[var_names[pos]][0])
            pos += 1
        if pos == len(var_names):
            return accepting(p, acc)
        v = var_names[pos]
        for e, w in items:
            assign[v] = (e, w)
            if extend(pos + 1, mat_mul(acc, e)):
                return True
            del assign[v]
        return False

    if extend(0, identity):
        image = tuple(s for v in var_names for s in assign[v][1])
        return PropertyVerdict(True, image, None, "monoid")
    if monoid.truncated:
        raise Inconclusive(
            "transition monoid truncated and no accepting assignment among the materialised elements",
            covered=f"{len(items)} elements for {m} variables",
        )
    return PropertyVerdict(False, None, None, "monoid")


# -- every word a k-power / a power --------------------------------------------------------


def witness_bound(a: Automaton, p: Automaton) -> int:
    """Length ``r`` such that a language property failing at all fails on a
    word of length at most ``r``: ``3n`` on the ``n`` useful states, which a
    complete DFA with a dead state keeps within ``3N - 3``."""
    r = 3 * p.n_states
    if a.kind is Kind.DFA and a.n_symbols >= 2 and has_dead_state(a):
        r = min(r, 3 * a.n_states - 3)
    return r


def build_non_k_power_acceptor(r: int, k: int, alphabet) -> Automaton:
    """Automaton accepting only non-k-powers, and all of them of length <= r.

    A word of length ``kL`` is a k-power iff each of its ``k`` sections equals
    the first.  For each mismatch symbol ``y``, section ``i`` and offset
    ``j <= r/k`` a lobe reads a symbol ``x != y`` at offset ``j``, counts
    ``(i-1)L - 1`` symbols for a guessed ``L``, reads ``y`` and hands over to a
    shared countdown of the ``(k-i+1)L - j`` remaining symbols.  A separate
    ``k``-cycle accepts lengths not divisible by ``k``; the start state is
    final because the empty word is not a k-power.
    """
    alphabet = tuple(alphabet)
    if k < 2:
        raise ValueError("k must be at least 2")
    if r < 1:
        raise ValueError("r must be at least 1")
    sigma = len(alphabet)
    lmax = r // k
    trans = set()
    counter = itertools.count()
    start = next(counter)
    prefix = [start] + [next(counter) for _ in range(max(lmax - 1, 0))]
    # prefix[j-1] has read j-1 symbols
    for j in range(len(prefix) - 1):
        for c in range(sigma):
            trans.add((prefix[j], c, prefix[j + 1]))
    tail_len = (k - 1) * lmax
    tail = [next(counter) for _ in range(tail_len + 1)]
    for t in range(1, tail_len + 1):
        for c in range(sigma):
            trans.add((tail[t], c, tail[t - 1]))
    if sigma >= 2 and lmax >= 1:
        for y in range(sigma):
            for i in range(2, k + 1):
                for j in range(1, lmax + 1):
                    gap = [next(counter) for _ in range((i - 1) * lmax)]
                    for x in range(sigma):
                        if x != y:
                            trans.add((prefix[j - 1], x, gap[0]))
                    for c_count, state in enumerate(gap):
                        if c_count + 1 < len(gap):
                            for c in range(sigma):
                                trans.add((state, c, gap[c_count + 1]))
                        if (c_count + 1) % (i - 1) == 0:
                            length = (c_count + 1) // (i - 1)
                            if j <= length <= lmax:
                                trans.add((state, y, tail[(k - i + 1) * length - j]))
    cycle = [next(counter) for _ in range(k)]
    for idx in range(k):
        for c in range(sigma):
            trans.add((cycle[idx], c, cycle[(idx + 1) % k]))
    n_states = next(counter)
    finals = {start, tail[0]} | set(cycle[1:])
    return Automaton(alphabet, n_states, frozenset(trans), {start, cycle[0]}, finals)


def _non_k_power_search(a: Automaton, k: int, window: bool) -> PropertyVerdict:
    p = prepare(a)
    n = p.n_states
    if n == 0:
        return PropertyVerdict(True, None, 0, "empty")
    r = witness_bound(a, p)
    lo = n if window else 0
    method = "non-k-power-product" + ("-window" if window else "")
    if lo > r:
        return PropertyVerdict(True, None, r, method)
    target = p if not window else product(p, length_window(lo, r, p.alphabet))
    if k > r:
        # no word of length <= r is a k-power
        found = shortest_word(target)
        return PropertyVerdict(not found.holds, found.witness, r, method + "-short")
    found = shortest_word(product(target, build_non_k_power_acceptor(r, k, p.alphabet)))
    return PropertyVerdict(not found.holds, found.witness, r, method)


def all_k_powers(a: Automaton, k: int) -> PropertyVerdict:
    """Is every accepted word a k-power?  The witness, when not, is the
    shortest accepted non-k-power (the empty word counts as one)."""
    return _non_k_power_search(a, k, window=False)


def all_but_finitely_many_k_powers(a: Automaton, k: int) -> PropertyVerdict:
    return _non_k_power_search(a, k, window=True)


def _power_scan(a: Automaton, window: bool) -> PropertyVerdict:
    p = prepare(a)
    n = p.n_states
    if n == 0:
        return PropertyVerdict(True, None, 0, "empty")
    r = witness_bound(a, p)
    cap = 7 * n
    method = "enumerate-7n" + ("-window" if window else "")
    for length in range(n if window else 0, r + 1):
        count = 0
        for w in words_of_length(p, length):
            count += 1
            if not is_power(w):
                tag = method + ("-cap" if count > cap else "")
                return PropertyVerdict(False, w, r, tag)
    return PropertyVerdict(True, None, r, method)


def all_powers(a: Automaton) -> PropertyVerdict:
    """Is every accepted word a power?

    Accepted words of length up to the witness bound are scanned in (length,
    lexicographic) order.  A language of powers has at most ``7n`` words of
    each length, so an overfull length is known to hold a non-power and the
    scan of that length simply continues until it meets it.
    """
    return _power_scan(a, window=False)


def all_but_finitely_many_powers(a: Automaton) -> PropertyVerdict:
    return _power_scan(a, window=True)


__all__ = [
    "DEFAULT_STATE_BUDGET",
    "KthRootAutomaton",
    "Pattern",
    "accepts_ge_k_power",
    "accepts_infinitely_many_ge_k_powers",
    "accepts_infinitely_many_k_powers",
    "accepts_k_power",
    "accepts_power",
    "all_but_finitely_many_k_powers",
    "all_but_finitely_many_powers",
    "all_k_powers",
    "all_powers",
    "build_kth_root",
    "build_non_k_power_acceptor",
    "pattern_acceptance",
    "witness_bound",
]
