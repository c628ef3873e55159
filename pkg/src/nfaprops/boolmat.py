"""Boolean transition matrices and the transition monoid of an NFA.

A :class:`BoolMatrix` stores each row as an ``int`` bitmask (bit ``j`` of
row ``i`` is entry ``(i, j)``), which keeps matrices hashable and makes the
boolean product a handful of ORs.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .automaton import Automaton, iter_bits
from .errors import DimensionMismatch, EpsilonNotSupported

DEFAULT_ELEMENT_CAP = 50_000


@dataclass(frozen=True)
class BoolMatrix:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if len(self.rows) != self.n:
            raise DimensionMismatch(f"{len(self.rows)} rows for dimension {self.n}")

    def __getitem__(self, ij) -> bool:
        i, j = ij
        return bool(self.rows[i] >> j & 1)

    def __matmul__(self, other: "BoolMatrix") -> "BoolMatrix":
        return mat_mul(self, other)

    @classmethod
    def identity(cls, n: int) -> "BoolMatrix":
        return cls(n, tuple(1 << i for i in range(n)))

    @classmethod
    def zero(cls, n: int) -> "BoolMatrix":
        return cls(n, (0,) * n)

    @classmethod
    def from_array(cls, array) -> "BoolMatrix":
        array = np.asarray(array, dtype=bool)
        n = array.shape[0]
        if array.shape != (n, n):
            raise DimensionMismatch(f"not a square matrix: {array.shape}")
        rows = tuple(sum(1 << int(j) for j in np.flatnonzero(row)) for row in array)
        return cls(n, rows)

    def to_array(self) -> np.ndarray:
        out = np.zeros((self.n, self.n), dtype=bool)
        for i, row in enumerate(self.rows):
            for j in iter_bits(row):
                out[i, j] = True
        return out

    def image(self, mask: int) -> int:
        """Row vector times matrix: states reachable from the set ``mask``."""
        out = 0
        for i in iter_bits(mask):
            out |= self.rows[i]
        return out


def mat_mul(x: BoolMatrix, y: BoolMatrix) -> BoolMatrix:
    if x.n != y.n:
        raise DimensionMismatch(f"{x.n} x {x.n} times {y.n} x {y.n}")
    yrows = y.rows
    out = []
    for row in x.rows:
        acc = 0
        while row:
            low = row & -row
            acc |= yrows[low.bit_length() - 1]
            row ^= low
        out.append(acc)
    return BoolMatrix(x.n, tuple(out))


def mat_pow(x: BoolMatrix, k: int) -> BoolMatrix:
    """``x**k`` by repeated squaring."""
    if k < 1:
        raise ValueError("exponent must be at least 1")
    result = None
    base = x
    while k:
        if k & 1:
            result = base if result is None else mat_mul(result, base)
        k >>= 1
        if k:
            base = mat_mul(base, base)
    return result


def _require_plain(a: Automaton):
    if a.has_epsilon:
        raise EpsilonNotSupported("transition matrices need an epsilon-free automaton")


def symbol_matrix(a: Automaton, symbol: int) -> BoolMatrix:
    _require_plain(a)
    rows = []
    for p in range(a.n_states):
        mask = 0
        for q in a.delta[p][symbol]:
            mask |= 1 << q
        rows.append(mask)
    return BoolMatrix(a.n_states, tuple(rows))


def word_matrix(a: Automaton, word: Iterable[int]) -> BoolMatrix:
    m = BoolMatrix.identity(a.n_states)
    for s in word:
        m = mat_mul(m, symbol_matrix(a, s))
    return m


def accepting(a: Automaton, b: BoolMatrix) -> bool:
    """Some initial-row, final-column entry of ``b`` is set."""
    if b.n != a.n_states:
        raise DimensionMismatch(f"matrix of dimension {b.n} for {a.n_states} states")
    reach = 0
    for q in a.initials:
        reach |= b.rows[q]
    return bool(reach & a.finals_mask)


@dataclass
class TransitionMonoid:
    """Matrices ``B_w`` for all words ``w``, each with a shortest witness.

    ``witness`` covers the whole monoid (the identity maps to the empty
    word).  ``semigroup`` maps the elements realised by *non-empty* words to
    their shortest non-empty witness; it differs from ``witness`` only at the
    identity.  When ``truncated`` is set the closure stopped early and both
    maps are incomplete.
    """

    generators: dict[int, BoolMatrix]
    witness: dict[BoolMatrix, tuple[int, ...]]
    semigroup: dict[BoolMatrix, tuple[int, ...]]
    truncated: bool = False
    identity: BoolMatrix = field(init=False)

    def __post_init__(self):
        n = next(iter(self.witness)).n if self.witness else 0
        self.identity = BoolMatrix.identity(n)

    @property
    def elements(self) -> set[BoolMatrix]:
        return set(self.witness)

    def __len__(self):
        return len(self.witness)


def monoid_closure(a: Automaton, element_cap: int = DEFAULT_ELEMENT_CAP) -> TransitionMonoid:
    """Breadth-first closure under right multiplication by the generators.

    Elements are discovered in (length, lexicographic) order of their
    witnesses, so each recorded witness is the least such word.
    """
    _require_plain(a)
    n = a.n_states
    gens = {s: symbol_matrix(a, s) for s in range(a.n_symbols)}
    identity = BoolMatrix.identity(n)
    semigroup: dict[BoolMatrix, tuple[int, ...]] = {}
    truncated = False

    def total():
        return len(semigroup) + (identity not in semigroup)

    queue: deque[BoolMatrix] = deque()
    for s, g in gens.items():
        if g not in semigroup:
            semigroup[g] = (s,)
            queue.append(g)
    if total() > element_cap:
        truncated = True
    while queue and not truncated:
        e = queue.popleft()
        w = semigroup[e]
        for s, g in gens.items():
            f = mat_mul(e, g)
            if f not in semigroup:
                semigroup[f] = w + (s,)
                queue.append(f)
                if total() > element_cap:
                    truncated = True
                    break
    witness = {identity: ()}
    witness.update((e, w) for e, w in semigroup.items() if e != identity)
    return TransitionMonoid(gens, witness, semigroup, truncated)


def power_sequence(x: BoolMatrix) -> tuple[list[BoolMatrix], int]:
    """Distinct powers ``x, x^2, ...`` up to the first repeat, and the
    (0-based) position where the cycle starts."""
    seen: dict[BoolMatrix, int] = {}
    seq: list[BoolMatrix] = []
    cur = x
    while cur not in seen:
        seen[cur] = len(seq)
        seq.append(cur)
        cur = mat_mul(cur, x)
    return seq, seen[cur]
