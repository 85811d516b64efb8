"""Exception hierarchy shared by every module.

The CLI maps these onto exit codes: budget problems exit 2, bad input
exits 3 and failed self-verification exits 4.
"""


class WordRepError(Exception):
    """Base class for all package errors."""


class InputError(WordRepError, ValueError):
    """The caller supplied an invalid graph, word, or argument."""


class DisconnectedGraphError(InputError):
    """A classification routine received a disconnected graph."""


class NotComparabilityError(InputError):
    """An order-theoretic routine needs a comparability graph."""


class BudgetExceeded(WordRepError):
    """An exhaustive search hit its size or depth limit; the answer is unknown."""


class VerificationError(WordRepError, AssertionError):
    """A constructed certificate failed its own independent check.

    This always indicates a bug in a construction, never bad input.
    """
