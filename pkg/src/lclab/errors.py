"""Exception hierarchy shared by the whole package.

The CLI maps these onto its exit-code contract: parse/validation problems
exit with 2, violated preconditions and size caps with 3, and internal
consistency failures (an oracle disagreeing with the engine, a broken
complex, a non-stabilizing limit) with 4.
"""


class LclabError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(LclabError):
    """Malformed problem input. Carries a position when one is known."""

    def __init__(self, message, line=None, column=None, token=None):
        self.line = line
        self.column = column
        self.token = token
        loc = ""
        if line is not None:
            loc = f" (line {line}, column {column})"
        tok = f" near {token!r}" if token else ""
        super().__init__(f"{message}{loc}{tok}")


class PreconditionError(LclabError):
    """An operation was called outside its contract (zero module, unit
    ideal, size cap exceeded, degree outside the computed region, ...)."""


class InternalConsistencyError(LclabError):
    """Two routes that must agree did not, or a complex is broken.

    This always signals a bug in the engine, never a mathematical fact.
    """
