"""Plain-text automaton format.

::

    # comment
    alphabet: a b c
    states: 5
    initial: 0
    final: 3 4
    trans: 0 a 1
    trans: 1 - 2        # '-' is epsilon
    kind: dfa           # optional; validated

Items may repeat (``initial``, ``final`` and ``trans`` accumulate).
"""
from __future__ import annotations

from pathlib import Path

from .automaton import EPSILON, Automaton, Kind
from .errors import InvalidAutomaton, ParseError

_KINDS = {"dfa": Kind.DFA, "nfa": None, "nfa-epsilon": None, "nfa_epsilon": None}


def _int(token, line):
    try:
        value = int(token)
    except ValueError:
        raise ParseError(line, f"expected a state number, got {token!r}") from None
    if value < 0:
        raise ParseError(line, f"negative state number {value}")
    return value


def parse_automaton(text: str) -> Automaton:
    alphabet = None
    n_states = None
    initials: list[int] = []
    finals: list[int] = []
    raw_trans: list[tuple[int, str, int, int]] = []
    kind = None
    kind_line = 0
    last_line = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        last_line = lineno
        key, sep, rest = line.partition(":")
        if not sep:
            raise ParseError(lineno, f"expected 'key: value', got {line!r}")
        key = key.strip().lower()
        fields = rest.split()
        if key == "alphabet":
            if alphabet is not None:
                raise ParseError(lineno, "alphabet declared twice")
            if not fields:
                raise ParseError(lineno, "empty alphabet")
            if len(set(fields)) != len(fields):
                raise ParseError(lineno, "duplicate symbol in alphabet")
            if "-" in fields:
                raise ParseError(lineno, "'-' is reserved for epsilon")
            alphabet = tuple(fields)
        elif key == "states":
            if n_states is not None:
                raise ParseError(lineno, "states declared twice")
            if len(fields) != 1:
                raise ParseError(lineno, "states takes one number")
            n_states = _int(fields[0], lineno)
        elif key == "initial":
            initials.extend(_int(f, lineno) for f in fields)
        elif key == "final":
            finals.extend(_int(f, lineno) for f in fields)
        elif key == "trans":
            if len(fields) != 3:
                raise ParseError(lineno, "trans takes 'source label target'")
            raw_trans.append((_int(fields[0], lineno), fields[1], _int(fields[2], lineno), lineno))
        elif key == "kind":
            if len(fields) != 1 or fields[0].lower() not in _KINDS:
                raise ParseError(lineno, "kind must be one of dfa, nfa, nfa-epsilon")
            kind = _KINDS[fields[0].lower()]
            kind_line = lineno
        else:
            raise ParseError(lineno, f"unknown item {key!r}")

    if alphabet is None:
        raise ParseError(last_line, "missing alphabet")
    if n_states is None:
        raise ParseError(last_line, "missing states")
    index = {name: i for i, name in enumerate(alphabet)}
    triples = set()
    for p, label, q, lineno in raw_trans:
        if label == "-":
            sym = EPSILON
        elif label in index:
            sym = index[label]
        else:
            raise ParseError(lineno, f"symbol {label!r} not in alphabet")
        if p >= n_states or q >= n_states:
            raise ParseError(lineno, "state number out of range")
        triples.add((p, sym, q))
    for q in initials + finals:
        if q >= n_states:
            raise ParseError(last_line, f"state {q} out of range")
    try:
        return Automaton(alphabet, n_states, frozenset(triples), frozenset(initials), frozenset(finals), kind)
    except InvalidAutomaton as exc:
        raise ParseError(kind_line or last_line, str(exc)) from None


def load_automaton(path) -> Automaton:
    return parse_automaton(Path(path).read_text(encoding="utf-8"))


def format_automaton(a: Automaton) -> str:
    lines = [
        "alphabet: " + " ".join(a.alphabet),
        f"states: {a.n_states}",
    ]
    if a.kind is Kind.DFA:
        lines.append("kind: dfa")
    if a.initials:
        lines.append("initial: " + " ".join(map(str, sorted(a.initials))))
    if a.finals:
        lines.append("final: " + " ".join(map(str, sorted(a.finals))))
    for p, sym, q in sorted(a.transitions):
        label = "-" if sym == EPSILON else a.alphabet[sym]
        lines.append(f"trans: {p} {label} {q}")
    return "\n".join(lines) + "\n"


def save_automaton(a: Automaton, path) -> None:
    Path(path).write_text(format_automaton(a), encoding="utf-8")
