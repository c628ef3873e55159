"""Combinatorics on concrete words: primitivity, borders, powers, palindromes.

Functions accept any sequence (``str``, ``tuple`` of symbol ids, ...).
Returned sub-words are slices of the input, so they keep its type.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import EmptyWord


@dataclass(frozen=True)
class PrimitivityReport:
    is_primitive: bool
    root: Sequence
    exponent: int


@dataclass(frozen=True)
class BorderReport:
    is_bordered: bool
    shortest_border: Sequence | None = None


def prefix_function(w: Sequence) -> list[int]:
    """Knuth-Morris-Pratt failure function: ``pi[i]`` is the length of the
    longest proper border of ``w[:i+1]``."""
    pi = [0] * len(w)
    k = 0
    for i in range(1, len(w)):
        while k and w[i] != w[k]:
            k = pi[k - 1]
        if w[i] == w[k]:
            k += 1
        pi[i] = k
    return pi


def find(pattern: Sequence, text: Sequence) -> int:
    """Leftmost index of ``pattern`` in ``text`` (KMP), or -1."""
    m = len(pattern)
    if m == 0:
        return 0
    pi = prefix_function(pattern)
    k = 0
    for i, c in enumerate(text):
        while k and c != pattern[k]:
            k = pi[k - 1]
        if c == pattern[k]:
            k += 1
            if k == m:
                return i - m + 1
    return -1


def primitivity(w: Sequence) -> PrimitivityReport:
    """Primitive root and exponent of a non-empty word.

    ``w`` occurs in ``w[1:] + w[:-1]`` iff it is a power; the leftmost
    occurrence at offset ``d - 1`` means the root has length ``d``.
    """
    n = len(w)
    if n == 0:
        raise EmptyWord("the empty word has no primitive root")
    rotated = list(w[1:]) + list(w[:-1])
    pos = find(list(w), rotated)
    period = n if pos < 0 else pos + 1
    exponent = n // period
    return PrimitivityReport(exponent == 1, w[:period], exponent)


def is_primitive(w: Sequence) -> bool:
    return primitivity(w).is_primitive


def is_power(w: Sequence) -> bool:
    """True iff ``w = x^k`` for some non-empty ``x`` and ``k >= 2``."""
    return len(w) > 0 and primitivity(w).exponent >= 2


def is_k_power(w: Sequence, k: int) -> bool:
    if len(w) == 0:
        raise EmptyWord("k-powers are non-empty by definition")
    if k < 2:
        raise ValueError("k must be at least 2")
    return len(w) % k == 0 and primitivity(w).exponent % k == 0


def borders(w: Sequence) -> BorderReport:
    """Shortest border ``u`` of ``w = u v u`` (``u`` non-empty, ``v`` possibly empty).

    The last non-zero entry on the failure chain is the shortest border; it
    never overlaps itself, so ``2|u| <= |w|`` holds automatically.
    """
    if len(w) == 0:
        raise EmptyWord("borders are defined for non-empty words")
    pi = prefix_function(w)
    length = pi[-1]
    if length == 0:
        return BorderReport(False, None)
    while pi[length - 1]:
        length = pi[length - 1]
    return BorderReport(True, w[:length])


def is_bordered(w: Sequence) -> bool:
    return len(w) > 0 and borders(w).is_bordered


def is_unbordered(w: Sequence) -> bool:
    # the empty word counts as unbordered; automaton searches skip it anyway
    return len(w) == 0 or not borders(w).is_bordered


def is_palindrome(w: Sequence) -> bool:
    return all(w[i] == w[-1 - i] for i in range(len(w) // 2))


def is_conjugate(u: Sequence, v: Sequence) -> bool:
    """``v`` is a rotation of ``u``."""
    return len(u) == len(v) and find(list(v), list(u) + list(u)) >= 0
