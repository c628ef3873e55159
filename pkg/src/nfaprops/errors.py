"""Exception types raised by the analysis routines."""


class AutomatonError(Exception):
    pass


class InvalidAutomaton(AutomatonError, ValueError):
    pass


class AlphabetMismatch(AutomatonError, ValueError):
    pass


class EpsilonNotSupported(AutomatonError, ValueError):
    """The routine needs an epsilon-free automaton."""


class NotADfa(AutomatonError, ValueError):
    pass


class UnaryAlphabet(AutomatonError, ValueError):
    pass


class DimensionMismatch(AutomatonError, ValueError):
    pass


class EmptyWord(ValueError):
    pass


class CapExceeded(AutomatonError):
    """More than ``cap`` accepted words were found at a single length."""

    def __init__(self, length, cap):
        super().__init__(f"more than {cap} accepted words of length {length}")
        self.length = length
        self.cap = cap


class StateBudgetExceeded(AutomatonError):
    def __init__(self, needed, budget):
        super().__init__(f"construction needs {needed} states, budget is {budget}")
        self.needed = needed
        self.budget = budget


class Inconclusive(AutomatonError):
    """A bounded search could not settle the question.

    ``covered`` describes what was actually checked (free-form text).
    """

    def __init__(self, message, covered=None):
        super().__init__(message)
        self.covered = covered


class SearchBudgetExceeded(Inconclusive):
    pass


class ParseError(AutomatonError, ValueError):
    def __init__(self, line, message):
        super().__init__(f"line {line}: {message}")
        self.line = line
