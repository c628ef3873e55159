"""Decide palindrome, power, pattern and border properties of the language
accepted by a finite automaton, with witnesses."""
from .automaton import (
    EPSILON,
    Automaton,
    Kind,
    PropertyVerdict,
    SizeMetrics,
    accepts,
    eliminate_epsilon,
    enumerate_words,
    is_empty,
    is_infinite,
    prepare,
    product,
    shortest_word,
    trim,
)
from .borders import (
    accepts_bordered,
    accepts_infinitely_many_bordered,
    accepts_infinitely_many_unbordered,
    accepts_unbordered,
    build_border_root,
)
from .boolmat import BoolMatrix, TransitionMonoid, accepting, mat_mul, mat_pow, monoid_closure, symbol_matrix
from .errors import (
    AlphabetMismatch,
    AutomatonError,
    CapExceeded,
    DimensionMismatch,
    EmptyWord,
    EpsilonNotSupported,
    Inconclusive,
    InvalidAutomaton,
    NotADfa,
    ParseError,
    SearchBudgetExceeded,
    StateBudgetExceeded,
    UnaryAlphabet,
)
from .oracle import OracleReport, oracle_count_per_length, oracle_decide
from .palindromes import (
    accepts_infinitely_many_nonpalindromes,
    accepts_infinitely_many_palindromes,
    accepts_palindrome,
    build_nonpal_acceptor,
    build_pal_root,
    has_dead_state,
    is_palindromic,
)
from .powers import (
    Pattern,
    accepts_ge_k_power,
    accepts_infinitely_many_ge_k_powers,
    accepts_infinitely_many_k_powers,
    accepts_k_power,
    accepts_power,
    all_but_finitely_many_k_powers,
    all_but_finitely_many_powers,
    all_k_powers,
    all_powers,
    build_kth_root,
    build_non_k_power_acceptor,
    pattern_acceptance,
)
from .textio import format_automaton, load_automaton, parse_automaton, save_automaton
from .words import is_bordered, is_k_power, is_palindrome, is_power, is_primitive, is_unbordered, primitivity
